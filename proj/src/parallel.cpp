#include <besselcx/parallel.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace besselcx {

int worker_count()
{
    if (const char* env = std::getenv("BESSELCX_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && n > 0)
            return static_cast<int>(std::min(n, 256L));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {
thread_local bool inside_worker = false;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    int workers = worker_count();
    // nested calls run inline
    if (workers <= 1 || n <= 1 || inside_worker) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        inside_worker = true;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                break;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
        inside_worker = false;
    };
    std::vector<std::thread> pool;
    std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    for (std::size_t t = 1; t < count; ++t)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace besselcx
