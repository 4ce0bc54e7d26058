#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lagcert/laguerre.hpp"
#include "lagcert/tables.hpp"

namespace lagcert::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUncovered = 2,  // uncovered k, inconclusive oracle, failing table check
  kExitReducible = 3,
  kExitInvalid = 4,
};

/// Instance flags as typed on the command line. `a` lists a_{m-1} .. a_1;
/// a single entry is used for every one of them.
struct InstanceFlags {
  std::int64_t m = 0;
  std::int64_t u = 0;
  std::int64_t v = 1;
  std::string a_m = "1";
  std::vector<std::string> a;
  std::string a0 = "1";
  std::string phi;
};

struct CommandConfig {
  std::string subcommand;
  InstanceFlags instance;
  std::string f;             // polygon, oracle
  std::string p;             // polygon
  std::uint64_t budget = 200;  // oracle prime budget
  std::int64_t bound = 1;      // witness-search coefficient bound
  TableOptions tables;
  std::string cert_dir;      // empty: LAGUERRE_CERT_HOME, then "."
  std::string verify_path;   // certify --verify
  bool json = false;
};

/// Parses instance flags; std::invalid_argument on malformed input.
InstanceParams to_params(const InstanceFlags& flags);

/// Directory for certificate files: flag, then environment, then ".".
std::string certificate_directory(const std::string& flag);
std::string certificate_filename(const InstanceParams& params);

int cmd_construct(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_polygon(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_certify(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tables(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_witness_search(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.subcommand.
int run_command(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// Full argv entry point: parsing, dispatch and exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lagcert::cli
