#include "dcsim/types.hpp"

#include <algorithm>

namespace dcsim {

void JobSet::sort()
{
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        if (a.submit_time != b.submit_time)
            return a.submit_time < b.submit_time;
        return a.id < b.id;
    });
}

} // namespace dcsim
