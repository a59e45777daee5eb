#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace slpcat::detail {

/// Evaluates fn(k) for k in [0, count) on a few threads and concatenates the
/// returned vectors in index order, so the result does not depend on scheduling.
template <typename Fn>
auto parallel_concat(std::size_t count, Fn fn) -> decltype(fn(std::size_t{}))
{
    using Result = decltype(fn(std::size_t{}));
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t chunks = std::min(hw, std::max<std::size_t>(1, count / 64));
    Result out;
    if (chunks <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
            Result part = fn(k);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return out;
    }
    std::vector<std::future<Result>> futures;
    futures.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = count * c / chunks, hi = count * (c + 1) / chunks;
        futures.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            Result acc;
            for (std::size_t k = lo; k < hi; ++k) {
                Result part = fn(k);
                acc.insert(acc.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            }
            return acc;
        }));
    }
    for (auto& f : futures) {
        Result part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

} // namespace slpcat::detail
