#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nsalg {

struct SelfcheckOptions {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::int64_t max_generator = 30;
};

struct SelfcheckReport {
    std::size_t instances = 0;
    /// Per category ("membership", "maxima", "conductor", "extensions"): comparisons made.
    std::map<std::string, std::size_t> checks;
    std::map<std::string, std::size_t> discrepancies;
    /// One line per discrepancy, for diagnosis.
    std::vector<std::string> failures;

    std::size_t total_discrepancies() const;
};

/// Fast paths against the brute-force oracle on a seeded random corpus.
SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

}  // namespace nsalg
