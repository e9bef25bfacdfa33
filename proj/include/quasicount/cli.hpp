#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "quasicount/numtheory.hpp"

namespace quasicount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConsistency = 2;

inline constexpr u64 kMaxN = 1'000'000'000;
inline constexpr u64 kMaxRange = 1'000'000;
/// Largest oracle bound QUASICOUNT_ORACLE_MAX may request.
inline constexpr u64 kMaxOracleBound = 20'000;

/// Oracle bound from QUASICOUNT_ORACLE_MAX, or the default when unset.
/// Throws DomainError for a malformed or out-of-range value.
u64 oracle_bound_from_env();

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasicount::cli
