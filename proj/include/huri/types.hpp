#ifndef HURI_TYPES_HPP
#define HURI_TYPES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "huri/decimal.hpp"

namespace huri {

using Tid = std::int64_t;
using Quantity = std::uint32_t;
using Support = std::uint64_t;
using ItemIndex = std::uint32_t;

// One stored (item, quantity) cell of a transaction. Quantities are always
// >= 1; an absent item means quantity zero.
struct ItemQuantity {
    ItemIndex item = 0;
    Quantity quantity = 0;

    friend bool operator==(const ItemQuantity&, const ItemQuantity&) = default;
};

struct Transaction {
    Tid tid = 0;
    std::vector<ItemQuantity> entries;  // sorted by item index

    [[nodiscard]] Quantity quantity_of(ItemIndex item) const;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

// Immutable transaction database plus its item universe. Safe to share
// across threads once constructed.
class TransactionDataset {
  public:
    struct Posting {
        std::uint32_t transaction = 0;  // index into transactions()
        Quantity quantity = 0;
    };

    // Validates and indexes the data: unique item ids without delimiter
    // characters, unique positive tids, entry quantities >= 1, no empty
    // transactions, entry indices in range. Throws std::invalid_argument.
    static TransactionDataset create(std::vector<std::string> items,
                                     std::vector<Transaction> transactions);

    TransactionDataset() = default;

    [[nodiscard]] std::size_t size() const { return transactions_.size(); }
    [[nodiscard]] std::size_t item_count() const { return items_.size(); }
    [[nodiscard]] std::span<const std::string> items() const { return items_; }
    [[nodiscard]] std::span<const Transaction> transactions() const { return transactions_; }
    [[nodiscard]] const std::string& item_id(ItemIndex index) const { return items_[index]; }
    [[nodiscard]] std::optional<ItemIndex> item_index(std::string_view id) const;

    [[nodiscard]] Quantity quantity(std::uint32_t transaction, ItemIndex item) const {
        return transactions_[transaction].quantity_of(item);
    }
    [[nodiscard]] std::span<const Posting> postings(ItemIndex item) const {
        return postings_[item];
    }
    // Total units of the item sold across the dataset.
    [[nodiscard]] Support total_quantity(ItemIndex item) const { return total_quantity_[item]; }
    [[nodiscard]] Support total_quantity() const;

    // Same data with extra items (typically declared only in a utility
    // table) appended to the universe. Existing ids are kept once.
    [[nodiscard]] TransactionDataset with_declared_items(
        std::span<const std::string> extra) const;

    friend bool operator==(const TransactionDataset& a, const TransactionDataset& b) {
        return a.items_ == b.items_ && a.transactions_ == b.transactions_;
    }

  private:
    std::vector<std::string> items_;
    std::vector<Transaction> transactions_;
    std::unordered_map<std::string, ItemIndex> index_;
    std::vector<std::vector<Posting>> postings_;
    std::vector<Support> total_quantity_;
};

// Per-unit profit of each item. Entry order follows the source.
class UtilityTable {
  public:
    // Rejects duplicate ids and negative utilities (zero is allowed).
    static UtilityTable create(std::vector<std::pair<std::string, Decimal>> entries);

    UtilityTable() = default;

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] std::span<const std::pair<std::string, Decimal>> entries() const {
        return entries_;
    }
    [[nodiscard]] bool contains(std::string_view id) const;
    [[nodiscard]] std::optional<Decimal> find(std::string_view id) const;
    // Throws std::out_of_range for unknown items.
    [[nodiscard]] Decimal external_utility(std::string_view id) const;

  private:
    std::vector<std::pair<std::string, Decimal>> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct CustomerRow {
    Tid tid = 0;
    std::string customer_id;
    std::string customer_name;

    friend bool operator==(const CustomerRow&, const CustomerRow&) = default;
};

// Optional mapping of transactions to customer identity. customer_id is the
// key; customer_name is display-only and may repeat across ids.
class CustomerDirectory {
  public:
    static CustomerDirectory create(std::vector<CustomerRow> rows);

    CustomerDirectory() = default;

    [[nodiscard]] std::size_t size() const { return rows_.size(); }
    [[nodiscard]] std::span<const CustomerRow> rows() const { return rows_; }
    [[nodiscard]] const CustomerRow* find(Tid tid) const;

  private:
    std::vector<CustomerRow> rows_;
    std::unordered_map<Tid, std::size_t> by_tid_;
};

// Total units of `item` sold: the sum of its quantity over every
// transaction. Throws std::out_of_range for items outside the universe.
Support internal_utility(const TransactionDataset& dataset, std::string_view item);

}  // namespace huri

#endif
