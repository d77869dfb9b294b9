#ifndef HURI_ORACLE_HPP
#define HURI_ORACLE_HPP

#include <set>
#include <string>
#include <vector>

#include "huri/mining.hpp"
#include "huri/segmentation.hpp"
#include "huri/types.hpp"

namespace huri {

// Reference results produced by exhaustive enumeration. Deliberately slow:
// every subset of the rare singletons is scanned against every transaction
// with no candidate generation and no pruning, so agreement with the mining
// module is evidence rather than tautology.
struct OracleEntry {
    std::vector<std::string> items;  // sorted ascending
    Support support = 0;
    Decimal utility;
};

struct OracleResult {
    std::vector<OracleEntry> rare_entries;  // sorted by size, then lexicographically
    std::set<Tid> premium_tids;
};

inline constexpr std::size_t kOracleMaxRareItems = 24;

// Enumerates all non-empty subsets of the rare-singleton set and the premium
// transactions. Throws std::invalid_argument when the number of rare
// singletons exceeds kOracleMaxRareItems.
OracleResult enumerate_rare_itemsets(const TransactionDataset& dataset,
                                     const UtilityTable& utilities, const MiningConfig& config,
                                     Decimal customer_threshold);

// Every itemset over the whole universe whose support is below the
// threshold, by exhaustive scan; quantifies what the rare-singleton
// sublattice misses. Only usable for universes of at most `max_items`.
std::vector<OracleEntry> enumerate_full_lattice(const TransactionDataset& dataset,
                                                const UtilityTable& utilities,
                                                const MiningConfig& config,
                                                std::size_t max_items = kOracleMaxRareItems);

struct OracleMismatch {
    std::vector<std::string> items;
    std::string detail;  // e.g. "support 3 != oracle 4"
};

struct OracleDiff {
    std::vector<std::vector<std::string>> missing;  // oracle has, result lacks
    std::vector<std::vector<std::string>> extra;    // result has, oracle lacks
    std::vector<OracleMismatch> mismatched;
    std::vector<Tid> premium_missing;
    std::vector<Tid> premium_extra;

    [[nodiscard]] bool empty() const {
        return missing.empty() && extra.empty() && mismatched.empty() &&
               premium_missing.empty() && premium_extra.empty();
    }
    [[nodiscard]] std::string str() const;
};

// Entrywise comparison of mined itemsets (items, support, utility) and the
// premium transaction set against the oracle.
OracleDiff diff(const MiningResult& result, const SegmentationReport& segmentation,
                const OracleResult& oracle);

}  // namespace huri

#endif
