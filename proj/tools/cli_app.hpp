#pragma once

#include <iosfwd>

namespace lex2vec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Entry point for the lex2vec command line. `in` backs "--embeddings -".
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lex2vec::cli
