/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return ttpack::run_cli(args, std::cout, std::cerr);
}
