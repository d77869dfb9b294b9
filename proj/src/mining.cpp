#include "huri/mining.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace huri {

namespace {

// Internal level-wise state: itemsets as vectors of compact ranks (rank =
// position of the item in the lexicographically sorted rare-item list), so
// rank order equals canonical item-id order.
using RankVec = std::vector<std::uint32_t>;

struct RankVecHash {
    std::size_t operator()(const RankVec& v) const {
        std::size_t h = v.size();
        for (std::uint32_t x : v) {
            h = h * 1000003u + x + 0x9e3779b9u;
        }
        return h;
    }
};

struct TidEntry {
    std::uint32_t transaction = 0;
    Quantity min_quantity = 0;
};

struct Node {
    RankVec items;
    std::vector<TidEntry> tids;
};

struct Candidate {
    RankVec items;
    std::size_t left = 0;
    std::size_t right = 0;
};

// Apriori join over one lexicographically sorted level of k-itemsets: pairs
// sharing a (k-1)-prefix produce a (k+1)-candidate, kept only if all its
// k-subsets are in the level. Output stays lexicographically sorted.
std::vector<Candidate> join_level(const std::vector<RankVec>& level) {
    std::vector<Candidate> out;
    if (level.empty()) {
        return out;
    }
    const std::size_t k = level[0].size();
    std::unordered_set<RankVec, RankVecHash> present(level.begin(), level.end());
    RankVec subset(k);

    for (std::size_t i = 0; i < level.size(); ++i) {
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            if (!std::equal(level[i].begin(), level[i].end() - 1, level[j].begin(),
                            level[j].end() - 1)) {
                break;  // prefix group over; the level is sorted
            }
            Candidate cand;
            cand.items = level[i];
            cand.items.push_back(level[j].back());
            cand.left = i;
            cand.right = j;

            // Dropping the last or second-to-last position recovers the two
            // parents, so only the remaining k-subsets need checking.
            bool keep = true;
            for (std::size_t drop = 0; drop + 2 < cand.items.size() && keep; ++drop) {
                subset.clear();
                for (std::size_t p = 0; p < cand.items.size(); ++p) {
                    if (p != drop) {
                        subset.push_back(cand.items[p]);
                    }
                }
                keep = present.contains(subset);
            }
            if (keep) {
                out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

std::vector<TidEntry> intersect(const std::vector<TidEntry>& a, const std::vector<TidEntry>& b) {
    std::vector<TidEntry> out;
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].transaction < b[ib].transaction) {
            ++ia;
        } else if (b[ib].transaction < a[ia].transaction) {
            ++ib;
        } else {
            out.push_back({a[ia].transaction, std::min(a[ia].min_quantity, b[ib].min_quantity)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

Support evaluate_support(const std::vector<TidEntry>& tids, SupportMode mode) {
    if (mode == SupportMode::kCount) {
        return tids.size();
    }
    Support sum = 0;
    for (const TidEntry& e : tids) {
        sum += e.min_quantity;
    }
    return sum;
}

std::vector<ItemIndex> resolve_items(const TransactionDataset& dataset, const Itemset& itemset) {
    std::vector<ItemIndex> indices;
    indices.reserve(itemset.size());
    for (const std::string& id : itemset.items()) {
        auto index = dataset.item_index(id);
        if (!index) {
            throw std::out_of_range("unknown item " + id);
        }
        indices.push_back(*index);
    }
    return indices;
}

}  // namespace

Itemset::Itemset(std::vector<std::string> items) : items_(std::move(items)) {
    if (items_.empty()) {
        throw std::invalid_argument("itemset must contain at least one item");
    }
    std::sort(items_.begin(), items_.end());
    if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
        throw std::invalid_argument("itemset contains a duplicate item");
    }
}

bool Itemset::contains(std::string_view id) const {
    return std::binary_search(items_.begin(), items_.end(), id);
}

std::string Itemset::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += items_[i];
    }
    out += '}';
    return out;
}

Decimal MiningConfig::support_threshold(std::size_t n_transactions) const {
    if (max_support_abs) {
        if (max_support_abs->is_negative()) {
            throw std::invalid_argument("absolute support threshold must be non-negative");
        }
        return *max_support_abs;
    }
    if (max_support_fraction.raw() <= 0 || max_support_fraction > Decimal::from_int(1)) {
        throw std::invalid_argument("max support fraction must lie in (0, 1]");
    }
    return max_support_fraction * static_cast<std::int64_t>(n_transactions);
}

std::string to_string(SupportMode mode) {
    return mode == SupportMode::kQuantity ? "quantity" : "count";
}

std::string to_string(UtilityMode mode) {
    return mode == UtilityMode::kAdditive ? "additive" : "cooccurrence";
}

std::optional<SupportMode> support_mode_from(std::string_view name) {
    if (name == "quantity") {
        return SupportMode::kQuantity;
    }
    if (name == "count") {
        return SupportMode::kCount;
    }
    return std::nullopt;
}

std::optional<UtilityMode> utility_mode_from(std::string_view name) {
    if (name == "additive") {
        return UtilityMode::kAdditive;
    }
    if (name == "cooccurrence") {
        return UtilityMode::kCooccurrence;
    }
    return std::nullopt;
}

Support item_support(const TransactionDataset& dataset, std::string_view item, SupportMode mode) {
    auto index = dataset.item_index(item);
    if (!index) {
        throw std::out_of_range("unknown item " + std::string(item));
    }
    if (mode == SupportMode::kCount) {
        return dataset.postings(*index).size();
    }
    return dataset.total_quantity(*index);
}

Support itemset_support(const TransactionDataset& dataset, const Itemset& itemset,
                        SupportMode mode) {
    std::vector<ItemIndex> indices = resolve_items(dataset, itemset);

    // Drive the scan from the member with the shortest posting list.
    ItemIndex lead = indices[0];
    for (ItemIndex index : indices) {
        if (dataset.postings(index).size() < dataset.postings(lead).size()) {
            lead = index;
        }
    }

    Support support = 0;
    for (const TransactionDataset::Posting& posting : dataset.postings(lead)) {
        Quantity min_quantity = posting.quantity;
        bool all_present = true;
        for (ItemIndex index : indices) {
            if (index == lead) {
                continue;
            }
            Quantity q = dataset.quantity(posting.transaction, index);
            if (q == 0) {
                all_present = false;
                break;
            }
            min_quantity = std::min(min_quantity, q);
        }
        if (all_present) {
            support += mode == SupportMode::kCount ? 1 : min_quantity;
        }
    }
    return support;
}

Decimal item_total_utility(const TransactionDataset& dataset, const UtilityTable& utilities,
                           std::string_view item) {
    Support internal = internal_utility(dataset, item);
    return utilities.external_utility(item) * static_cast<std::int64_t>(internal);
}

Decimal itemset_utility(const TransactionDataset& dataset, const UtilityTable& utilities,
                        const Itemset& itemset, UtilityMode mode) {
    if (mode == UtilityMode::kAdditive) {
        Decimal total;
        for (const std::string& id : itemset.items()) {
            total += item_total_utility(dataset, utilities, id);
        }
        return total;
    }

    std::vector<ItemIndex> indices = resolve_items(dataset, itemset);
    std::vector<Decimal> external;
    external.reserve(indices.size());
    for (const std::string& id : itemset.items()) {
        external.push_back(utilities.external_utility(id));
    }

    Decimal total;
    for (std::uint32_t t = 0; t < dataset.size(); ++t) {
        Decimal txn_part;
        bool all_present = true;
        for (std::size_t m = 0; m < indices.size(); ++m) {
            Quantity q = dataset.quantity(t, indices[m]);
            if (q == 0) {
                all_present = false;
                break;
            }
            txn_part += external[m] * static_cast<std::int64_t>(q);
        }
        if (all_present) {
            total += txn_part;
        }
    }
    return total;
}

std::vector<RareItemsetEntry> rare_singletons(const TransactionDataset& dataset,
                                              const MiningConfig& config,
                                              const UtilityTable* utilities) {
    if (dataset.size() == 0) {
        throw std::invalid_argument("dataset contains no transactions");
    }
    Decimal threshold = config.support_threshold(dataset.size());

    std::vector<std::string> ids(dataset.items().begin(), dataset.items().end());
    std::sort(ids.begin(), ids.end());

    std::vector<RareItemsetEntry> out;
    for (std::string& id : ids) {
        Support support = item_support(dataset, id, config.support_mode);
        if (Decimal::from_int(static_cast<std::int64_t>(support)) < threshold) {
            Decimal utility;
            if (utilities != nullptr) {
                utility = item_total_utility(dataset, *utilities, id);
            }
            out.push_back({Itemset({std::move(id)}), support, utility});
        }
    }
    return out;
}

std::vector<Itemset> generate_candidates(std::span<const Itemset> level) {
    if (level.empty()) {
        return {};
    }
    const std::size_t k = level[0].size();
    for (const Itemset& itemset : level) {
        if (itemset.size() != k) {
            throw std::invalid_argument("candidate generation requires itemsets of one size");
        }
    }

    // Compact the level onto lexicographic ranks.
    std::vector<std::string> ids;
    for (const Itemset& itemset : level) {
        ids.insert(ids.end(), itemset.items().begin(), itemset.items().end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto rank_of = [&](const std::string& id) {
        return static_cast<std::uint32_t>(
            std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };

    std::vector<RankVec> compact;
    compact.reserve(level.size());
    for (const Itemset& itemset : level) {
        RankVec v;
        v.reserve(k);
        for (const std::string& id : itemset.items()) {
            v.push_back(rank_of(id));
        }
        compact.push_back(std::move(v));
    }
    std::sort(compact.begin(), compact.end());
    compact.erase(std::unique(compact.begin(), compact.end()), compact.end());

    std::vector<Itemset> out;
    for (const Candidate& cand : join_level(compact)) {
        std::vector<std::string> members;
        members.reserve(cand.items.size());
        for (std::uint32_t rank : cand.items) {
            members.push_back(ids[rank]);
        }
        out.push_back(Itemset(std::move(members)));
    }
    return out;
}

MiningResult mine_rare_itemsets(const TransactionDataset& dataset, const UtilityTable& utilities,
                                const MiningConfig& config) {
    MiningResult result;
    result.config = config;
    result.n_transactions = dataset.size();
    result.n_items = dataset.item_count();

    Decimal threshold = config.support_threshold(dataset.size());
    std::vector<RareItemsetEntry> singles = rare_singletons(dataset, config, &utilities);

    // Compact catalogs for the level loop; singles are sorted by id, so
    // rank order is lexicographic.
    const std::size_t r = singles.size();
    std::vector<std::string> id_of_rank(r);
    std::vector<ItemIndex> item_of_rank(r);
    std::vector<Decimal> total_utility_of_rank(r);
    std::vector<Decimal> external_of_rank(r);
    std::vector<Node> level;
    level.reserve(r);
    for (std::size_t rank = 0; rank < r; ++rank) {
        const std::string& id = singles[rank].itemset.items()[0];
        ItemIndex index = *dataset.item_index(id);
        id_of_rank[rank] = id;
        item_of_rank[rank] = index;
        total_utility_of_rank[rank] = item_total_utility(dataset, utilities, id);
        external_of_rank[rank] = utilities.external_utility(id);

        Node node;
        node.items = {static_cast<std::uint32_t>(rank)};
        for (const TransactionDataset::Posting& posting : dataset.postings(index)) {
            node.tids.push_back({posting.transaction, posting.quantity});
        }
        level.push_back(std::move(node));
    }

    auto make_entry = [&](const RankVec& ranks, const std::vector<TidEntry>& tids,
                          Support support) {
        Decimal utility;
        if (config.utility_mode == UtilityMode::kAdditive) {
            for (std::uint32_t rank : ranks) {
                utility += total_utility_of_rank[rank];
            }
        } else {
            for (const TidEntry& e : tids) {
                for (std::uint32_t rank : ranks) {
                    Quantity q = dataset.quantity(e.transaction, item_of_rank[rank]);
                    utility += external_of_rank[rank] * static_cast<std::int64_t>(q);
                }
            }
        }
        std::vector<std::string> members;
        members.reserve(ranks.size());
        for (std::uint32_t rank : ranks) {
            members.push_back(id_of_rank[rank]);
        }
        return RareItemsetEntry{Itemset(std::move(members)), support, utility};
    };

    for (std::size_t rank = 0; rank < r; ++rank) {
        result.rare.push_back(singles[rank]);
    }

    while (!level.empty()) {
        std::vector<RankVec> shapes;
        shapes.reserve(level.size());
        for (const Node& node : level) {
            shapes.push_back(node.items);
        }
        std::vector<Node> next;
        for (Candidate& cand : join_level(shapes)) {
            std::vector<TidEntry> tids = intersect(level[cand.left].tids, level[cand.right].tids);
            Support support = evaluate_support(tids, config.support_mode);
            // Every candidate contains a rare singleton, so by
            // anti-monotonicity this check can only fail if support
            // counting is inconsistent.
            if (!(Decimal::from_int(static_cast<std::int64_t>(support)) < threshold)) {
                throw std::logic_error("candidate " + std::to_string(support) +
                                       " failed the rarity re-check");
            }
            result.rare.push_back(make_entry(cand.items, tids, support));
            next.push_back({std::move(cand.items), std::move(tids)});
        }
        level = std::move(next);
    }
    return result;
}

MiningResult filter_high_utility(MiningResult result, Decimal min_utility) {
    if (min_utility.is_negative()) {
        throw std::invalid_argument("minimum utility threshold must be non-negative");
    }
    result.high_utility.clear();
    for (const RareItemsetEntry& entry : result.rare) {
        if (entry.utility > min_utility) {
            result.high_utility.push_back(entry);
        }
    }
    result.config.min_utility = min_utility;
    return result;
}

}  // namespace huri
