#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bplab::cli {

/* Dispatcher shared by the binary and the tests. args holds the tokens
   after the program name. The report (JSON envelope or CSV rows) goes to
   out, usage text and warnings to err. Exit code: 0 on success, 1 when a
   requested mathematical check fails, 2 on invalid input. Every run is a
   pure function of the arguments: fixed RNG streams and fixed reduction
   orders make the output bytes independent of BPLAB_THREADS. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/* Same, writing to std::cout / std::cerr. */
int run_cli(const std::vector<std::string>& args);

}  // namespace bplab::cli
