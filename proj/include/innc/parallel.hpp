#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace innc {

/// fn(0), ..., fn(count-1) computed on contiguous chunks by up to `threads`
/// workers (0 = hardware concurrency) and returned in index order. The first
/// exception (by chunk) is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn fn)
    -> std::vector<std::invoke_result_t<Fn &, std::size_t>> {
    using T = std::invoke_result_t<Fn &, std::size_t>;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](std::size_t w) {
        const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
        try {
            for (std::size_t i = lo; i < hi; ++i)
                slots[i].emplace(fn(i));
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto &t : pool)
            t.join();
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(count);
    for (auto &s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace innc
