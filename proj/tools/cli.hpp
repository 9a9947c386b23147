#pragma once

#include <iosfwd>

namespace modadd::cli {

enum Exit : int {
    kOk = 0,
    kCheckFailed = 1,    // verification or conformance failure
    kUsage = 2,          // unknown flag, missing argument, bad subcommand
    kNoiseConfig = 3,    // unreadable or invalid noise file
    kOutOfRange = 4,     // n, a, b or shots outside the supported range
    kIo = 5,             // cannot read a report or write an output file
    kIncompatible = 6,   // compare on reports from different experiments
};

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modadd::cli
