#ifndef HURI_MINING_HPP
#define HURI_MINING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "huri/decimal.hpp"
#include "huri/types.hpp"

namespace huri {

// Canonically sorted set of item ids, never empty. Canonical order is
// lexicographic on the id, so equal sets compare equal.
class Itemset {
  public:
    explicit Itemset(std::vector<std::string> items);

    [[nodiscard]] std::span<const std::string> items() const { return items_; }
    [[nodiscard]] std::size_t size() const { return items_.size(); }
    [[nodiscard]] bool contains(std::string_view id) const;
    [[nodiscard]] std::string str() const;  // "{D,G}"

    friend bool operator==(const Itemset&, const Itemset&) = default;
    friend auto operator<=>(const Itemset&, const Itemset&) = default;

  private:
    std::vector<std::string> items_;
};

// Orders by size first, then lexicographically; the presentation order of
// every mining result.
struct SizeLexLess {
    bool operator()(const Itemset& a, const Itemset& b) const {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    }
};

enum class SupportMode {
    kQuantity,  // support of an itemset = total units sold (default)
    kCount,     // support = number of containing transactions
};

enum class UtilityMode {
    kAdditive,      // sum of member items' dataset-wide total utilities (default)
    kCooccurrence,  // utility restricted to transactions containing the whole set
};

struct MiningConfig {
    Decimal max_support_fraction = Decimal::from_raw(4'000);  // 0.40
    std::optional<Decimal> max_support_abs;                   // wins over the fraction if set
    Decimal min_utility = Decimal::from_int(45);
    SupportMode support_mode = SupportMode::kQuantity;
    UtilityMode utility_mode = UtilityMode::kAdditive;

    // Absolute support cutoff; itemsets are rare iff support < this, strictly.
    [[nodiscard]] Decimal support_threshold(std::size_t n_transactions) const;
};

struct RareItemsetEntry {
    Itemset itemset;
    Support support = 0;
    Decimal utility;

    friend bool operator==(const RareItemsetEntry&, const RareItemsetEntry&) = default;
};

struct MiningResult {
    std::vector<RareItemsetEntry> rare;          // sorted by size, then lexicographically
    std::vector<RareItemsetEntry> high_utility;  // subset of rare with utility > min_utility
    MiningConfig config;
    std::size_t n_transactions = 0;
    std::size_t n_items = 0;
};

std::string to_string(SupportMode mode);
std::string to_string(UtilityMode mode);
std::optional<SupportMode> support_mode_from(std::string_view name);
std::optional<UtilityMode> utility_mode_from(std::string_view name);

// Support of a single item under the given mode. Throws std::out_of_range
// for unknown items.
Support item_support(const TransactionDataset& dataset, std::string_view item, SupportMode mode);

// Support of an itemset: transactions containing every member (count mode),
// or the sum of the minimum member quantity over those transactions
// (quantity mode). Reduces to item_support for singletons.
Support itemset_support(const TransactionDataset& dataset, const Itemset& itemset,
                        SupportMode mode);

// external_utility(item) * internal_utility(item), the item's profit over
// the whole dataset.
Decimal item_total_utility(const TransactionDataset& dataset, const UtilityTable& utilities,
                           std::string_view item);

Decimal itemset_utility(const TransactionDataset& dataset, const UtilityTable& utilities,
                        const Itemset& itemset, UtilityMode mode);

// Items whose support is strictly below the threshold, sorted by item id.
// Entry utilities are filled when a utility table is supplied.
std::vector<RareItemsetEntry> rare_singletons(const TransactionDataset& dataset,
                                              const MiningConfig& config,
                                              const UtilityTable* utilities = nullptr);

// Apriori join of a level of equally sized itemsets: joins pairs sharing a
// (k-1)-prefix and prunes candidates with an absent k-subset. Input must be
// one level (all the same size); output is sorted and unique.
std::vector<Itemset> generate_candidates(std::span<const Itemset> level);

// Level-wise expansion from the rare singletons. Fills only the rare part
// of the result; every generated candidate has its support re-checked on
// the way (a failed check signals a support-mode bug and throws).
MiningResult mine_rare_itemsets(const TransactionDataset& dataset, const UtilityTable& utilities,
                                const MiningConfig& config);

// Copies entries with utility strictly above min_utility into high_utility;
// the rare part is left untouched.
MiningResult filter_high_utility(MiningResult result, Decimal min_utility);

}  // namespace huri

#endif
