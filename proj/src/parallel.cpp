#include <hrl/parallel.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace hrl {

std::size_t worker_count(std::size_t requested)
{
    std::size_t workers = std::max<std::size_t>(requested, 1);
    if (const char * cap = std::getenv("HRL_THREADS")) {
        try {
            auto limit = std::stoul(cap);
            if (limit > 0)
                workers = std::min<std::size_t>(workers, limit);
        } catch (const std::exception &) {
        }
    }
    return workers;
}

} // namespace hrl
