#include "huri/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace huri {

namespace {

bool valid_item_id(const std::string& id) {
    if (id.empty()) {
        return false;
    }
    return id.find_first_of(",\r\n") == std::string::npos;
}

}  // namespace

Quantity Transaction::quantity_of(ItemIndex item) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), item,
                               [](const ItemQuantity& e, ItemIndex i) { return e.item < i; });
    if (it != entries.end() && it->item == item) {
        return it->quantity;
    }
    return 0;
}

TransactionDataset TransactionDataset::create(std::vector<std::string> items,
                                              std::vector<Transaction> transactions) {
    TransactionDataset ds;
    ds.items_ = std::move(items);
    ds.transactions_ = std::move(transactions);

    for (std::size_t i = 0; i < ds.items_.size(); ++i) {
        if (!valid_item_id(ds.items_[i])) {
            throw std::invalid_argument("invalid item id: \"" + ds.items_[i] + "\"");
        }
        if (!ds.index_.emplace(ds.items_[i], static_cast<ItemIndex>(i)).second) {
            throw std::invalid_argument("duplicate item id: " + ds.items_[i]);
        }
    }

    ds.postings_.resize(ds.items_.size());
    ds.total_quantity_.assign(ds.items_.size(), 0);

    std::unordered_map<Tid, std::size_t> seen_tids;
    for (std::size_t t = 0; t < ds.transactions_.size(); ++t) {
        const Transaction& txn = ds.transactions_[t];
        if (txn.tid <= 0) {
            throw std::invalid_argument("transaction id must be positive");
        }
        if (!seen_tids.emplace(txn.tid, t).second) {
            throw std::invalid_argument("duplicate transaction id " + std::to_string(txn.tid));
        }
        if (txn.entries.empty()) {
            throw std::invalid_argument("empty transaction " + std::to_string(txn.tid));
        }
        ItemIndex prev = 0;
        bool first = true;
        for (const ItemQuantity& e : txn.entries) {
            if (e.item >= ds.items_.size()) {
                throw std::invalid_argument("transaction references unknown item index");
            }
            if (!first && e.item <= prev) {
                throw std::invalid_argument("transaction entries must be sorted and unique");
            }
            if (e.quantity == 0) {
                throw std::invalid_argument("zero quantity stored in transaction " +
                                            std::to_string(txn.tid));
            }
            ds.postings_[e.item].push_back({static_cast<std::uint32_t>(t), e.quantity});
            ds.total_quantity_[e.item] += e.quantity;
            prev = e.item;
            first = false;
        }
    }
    return ds;
}

std::optional<ItemIndex> TransactionDataset::item_index(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Support TransactionDataset::total_quantity() const {
    Support sum = 0;
    for (Support q : total_quantity_) {
        sum += q;
    }
    return sum;
}

TransactionDataset TransactionDataset::with_declared_items(
    std::span<const std::string> extra) const {
    std::vector<std::string> items(items_.begin(), items_.end());
    for (const std::string& id : extra) {
        if (index_.find(id) == index_.end() &&
            std::find(items.begin() + static_cast<std::ptrdiff_t>(items_.size()), items.end(),
                      id) == items.end()) {
            items.push_back(id);
        }
    }
    return create(std::move(items), {transactions_.begin(), transactions_.end()});
}

UtilityTable UtilityTable::create(std::vector<std::pair<std::string, Decimal>> entries) {
    UtilityTable table;
    table.entries_ = std::move(entries);
    for (std::size_t i = 0; i < table.entries_.size(); ++i) {
        const auto& [id, utility] = table.entries_[i];
        if (utility.is_negative()) {
            throw std::invalid_argument("negative external utility for item " + id);
        }
        if (!table.index_.emplace(id, i).second) {
            throw std::invalid_argument("duplicate utility entry for item " + id);
        }
    }
    return table;
}

bool UtilityTable::contains(std::string_view id) const {
    return index_.find(std::string(id)) != index_.end();
}

std::optional<Decimal> UtilityTable::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return entries_[it->second].second;
}

Decimal UtilityTable::external_utility(std::string_view id) const {
    auto value = find(id);
    if (!value) {
        throw std::out_of_range("no external utility for item " + std::string(id));
    }
    return *value;
}

CustomerDirectory CustomerDirectory::create(std::vector<CustomerRow> rows) {
    CustomerDirectory dir;
    dir.rows_ = std::move(rows);
    for (std::size_t i = 0; i < dir.rows_.size(); ++i) {
        if (dir.rows_[i].customer_id.empty()) {
            throw std::invalid_argument("empty customer id for tid " +
                                        std::to_string(dir.rows_[i].tid));
        }
        if (!dir.by_tid_.emplace(dir.rows_[i].tid, i).second) {
            throw std::invalid_argument("duplicate customer row for tid " +
                                        std::to_string(dir.rows_[i].tid));
        }
    }
    return dir;
}

const CustomerRow* CustomerDirectory::find(Tid tid) const {
    auto it = by_tid_.find(tid);
    return it == by_tid_.end() ? nullptr : &rows_[it->second];
}

Support internal_utility(const TransactionDataset& dataset, std::string_view item) {
    auto index = dataset.item_index(item);
    if (!index) {
        throw std::out_of_range("unknown item " + std::string(item));
    }
    return dataset.total_quantity(*index);
}

}  // namespace huri
