#ifndef SPECTRA_CLI_HPP_
#define SPECTRA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace spectra {

// Runs one CLI command. Exit codes: 0 affirmative, 1 negative/not-found,
// 2 error or inconclusive (the report body distinguishes the two).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace spectra

#endif  // SPECTRA_CLI_HPP_
