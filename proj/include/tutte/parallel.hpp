#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tutte {

// Shared knobs for the exhaustive enumerators. A bit limit above the hard
// cap is rejected outright; workers == 0 means "use available parallelism".
struct EnumerationOptions {
    unsigned workers = 0;
    int bit_limit = 30;
    static constexpr int kHardBitCap = 40;
    // Optional side-channel progress hook (chunks done, chunks total);
    // callers route this to stderr, never into result output.
    std::function<void(std::uint64_t, std::uint64_t)> progress;

    unsigned resolved_workers() const {
        if (workers > 0) return workers;
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1u;
    }

    void check_bit_limit_valid() const {
        if (bit_limit < 0 || bit_limit > kHardBitCap)
            throw std::invalid_argument("bit limit must be between 0 and 40");
    }
};

// Raised when an enumeration would exceed the configured mask-width limit.
class enumeration_limit_error : public std::runtime_error {
public:
    enumeration_limit_error(int bits, int limit)
        : std::runtime_error("enumeration over 2^" + std::to_string(bits) +
                             " masks exceeds the configured bit limit of " +
                             std::to_string(limit)),
          bits_(bits),
          limit_(limit) {}
    int bits() const { return bits_; }
    int limit() const { return limit_; }

private:
    int bits_;
    int limit_;
};

// Splits [0, count) into contiguous chunks pulled from a shared queue.
// Each worker folds its chunks into a private accumulator; worker
// accumulators merge in index order. Merging is plain addition of exact
// tallies (commutative, associative), so the result is schedule-independent.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc chunked_reduce(std::uint64_t count, const EnumerationOptions& opts, MakeAcc make_acc,
                   Body body, Merge merge) {
    const unsigned workers = opts.resolved_workers();
    if (count == 0 || workers <= 1) {
        Acc acc = make_acc();
        const std::uint64_t step = count > 16 ? count / 16 : (count ? count : 1);
        for (std::uint64_t begin = 0; begin < count; begin += step) {
            const std::uint64_t end = std::min(count, begin + step);
            body(acc, begin, end);
            if (opts.progress) opts.progress(end, count);
        }
        return acc;
    }

    const std::uint64_t chunk_count =
        std::min<std::uint64_t>(count, static_cast<std::uint64_t>(workers) * 16u);
    const std::uint64_t chunk_size = (count + chunk_count - 1) / chunk_count;

    std::vector<Acc> partial;
    partial.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) partial.push_back(make_acc());

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> masks_done{0};
    std::mutex progress_mutex;

    auto run = [&](unsigned widx) {
        Acc& acc = partial[widx];
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunk_count) break;
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t end = std::min(count, begin + chunk_size);
            if (begin >= end) continue;
            body(acc, begin, end);
            const std::uint64_t total_done =
                masks_done.fetch_add(end - begin, std::memory_order_relaxed) + (end - begin);
            if (opts.progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                opts.progress(total_done, count);
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();

    Acc result = std::move(partial[0]);
    for (unsigned w = 1; w < workers; ++w) merge(result, std::move(partial[w]));
    return result;
}

}  // namespace tutte
