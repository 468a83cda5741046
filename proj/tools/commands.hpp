#ifndef TORUSFK_TOOLS_COMMANDS_HPP
#define TORUSFK_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace torusfk::cli
{

enum ExitCode
{
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
};

// Validated options shared by every command.
struct RunConfig
{
    std::string command;
    std::string field = "Q";
    bool field_given = false;
    int order = 12;
    bool order_given = false;
    int r_max = 8;
    int wrap = 4;
    std::string format = "table"; // table | records
    std::string method;           // per command
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string m6 = "1";
    std::string m8 = "0";
    std::string input;
    std::string out;
    std::string svg;
};

int cmd_hh_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_m6(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_minimal_model(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gauge_fix(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_mc(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_jacobi(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_triangle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv, dispatches, and maps exceptions to exit codes.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace torusfk::cli

#endif
