/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_ENUMERATION_HH
#define TTPACK_GUARD_ENUMERATION_HH 1

#include <ttpack/tournament.hh>

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ttpack
{
    /**
     * The lexicographically least upper-triangle edge string over all
     * relabellings. The string is packed into an integer with its first
     * character as the most significant bit, so for a fixed n integer order
     * is string order.
     */
    struct CanonicalForm
    {
        int n = 0;
        std::uint64_t code = 0;

        auto to_string() const -> std::string;
        auto to_tournament() const -> Tournament;

        auto operator<=> (const CanonicalForm &) const = default;
    };

    auto parse_canonical_code(int n, std::string_view bits) -> CanonicalForm;

    /// Exact for n <= 10; larger orders are refused.
    auto canonical_form(const Tournament & t) -> CanonicalForm;

    /// One representative per isomorphism class, each equal to its own
    /// canonical form, in increasing code order. 1 <= n <= 8.
    auto enumerate_nonisomorphic(int n, unsigned workers = 1) -> std::vector<Tournament>;

    auto filter_by_score(std::span<const Tournament> classes, const ScoreSequence & s) -> std::vector<Tournament>;

    /// Scores of the classes of order n having exactly t directed triangles.
    auto scores_with_triangle_count(int n, std::int64_t t) -> std::set<ScoreSequence>;
    auto scores_with_triangle_count(std::span<const Tournament> classes, std::int64_t t) -> std::set<ScoreSequence>;

    constexpr int class_cache_format_version = 1;

    /// $TTPACK_CACHE_DIR, or ./cache when unset.
    auto default_cache_directory() -> std::filesystem::path;

    auto class_cache_path(const std::filesystem::path & dir, int n) -> std::filesystem::path;
    auto write_class_cache(const std::filesystem::path & file, int n, std::span<const Tournament> classes) -> void;
    auto read_class_cache(const std::filesystem::path & file) -> std::vector<Tournament>;

    /// Reads the cache if present and well formed, otherwise enumerates and
    /// (when a directory is given) writes it.
    auto load_or_enumerate(int n, const std::optional<std::filesystem::path> & cache_dir, unsigned workers = 1)
        -> std::vector<Tournament>;
}

#endif
