/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_RANDOM_HH
#define TTPACK_GUARD_RANDOM_HH 1

#include <cstdint>
#include <span>
#include <utility>

namespace ttpack
{
    /**
     * Counter-based random bits. Every value is a pure function of
     * (key, counter), so draws can be made in any order, or in parallel, and
     * always agree.
     */
    constexpr auto mix64(std::uint64_t z) -> std::uint64_t
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    constexpr auto hash64(std::uint64_t key, std::uint64_t counter) -> std::uint64_t
    {
        return mix64(mix64(key) ^ mix64(counter ^ 0x6a09e667f3bcc909ULL));
    }

    /// Sub-seed for an independent stream, e.g. one per trial.
    constexpr auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
    {
        return hash64(seed ^ 0xa54ff53a5f1d36f1ULL, index);
    }

    class CounterRng
    {
        private:
            std::uint64_t _key;
            std::uint64_t _counter = 0;

        public:
            explicit CounterRng(std::uint64_t key) : _key(key) { }

            auto next() -> std::uint64_t
            {
                return hash64(_key, _counter++);
            }

            /// Uniform in [0, bound), bound > 0, by rejection.
            auto below(std::uint64_t bound) -> std::uint64_t
            {
                std::uint64_t limit = -bound % bound;
                for ( ; ; ) {
                    auto x = next();
                    auto m = static_cast<unsigned __int128>(x) * bound;
                    if (static_cast<std::uint64_t>(m) >= limit)
                        return static_cast<std::uint64_t>(m >> 64);
                }
            }

            template <typename T_>
            auto shuffle(std::span<T_> items) -> void
            {
                for (std::size_t i = items.size() ; i > 1 ; --i) {
                    auto j = below(i);
                    std::swap(items[i - 1], items[j]);
                }
            }
    };
}

#endif
