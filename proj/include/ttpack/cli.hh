/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_CLI_HH
#define TTPACK_GUARD_CLI_HH 1

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ttpack
{
    inline constexpr const char * tool_version = "1.0.0";
    inline constexpr int report_format_version = 1;

    /// Seed used whenever --seed is not given.
    inline constexpr std::uint64_t default_seed = 24301;

    namespace exit_codes
    {
        inline constexpr int success = 0;
        inline constexpr int verification_failed = 1;
        inline constexpr int usage = 2;
    }

    /// args excludes the program name. Reports go to out (or --output),
    /// diagnostics to err.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
