#include "huri/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

namespace huri {

namespace {

struct Lines {
    std::istream& in;
    std::size_t number = 0;

    bool next(std::string& line) {
        if (!std::getline(in, line)) {
            return false;
        }
        ++number;
        if (number == 1 && line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' &&
            line[2] == '\xBF') {
            line.erase(0, 3);
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        return true;
    }
};

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string field = line.substr(start, comma - start);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) {
            field.erase(field.begin());
        }
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) {
            field.pop_back();
        }
        fields.push_back(std::move(field));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

std::int64_t parse_integer(const std::string& field, std::size_t line, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string(what) + " is not an integer: \"" + field + "\"");
    }
    return value;
}

Tid parse_tid(const std::string& field, std::size_t line) {
    std::int64_t tid = parse_integer(field, line, "tid");
    if (tid <= 0) {
        throw ParseError(line, "tid must be positive, got " + field);
    }
    return tid;
}

void check_item_token(const std::string& id, std::size_t line) {
    if (id.empty()) {
        throw ParseError(line, "empty item id");
    }
}

TransactionDataset parse_wide(Lines& lines) {
    std::string line;
    if (!lines.next(line)) {
        throw ParseError(1, "missing header");
    }
    std::vector<std::string> header = split_csv(line);
    if (header.size() < 2 || header[0] != "tid") {
        throw ParseError(lines.number, "expected header \"tid,<item>,...\"");
    }
    std::vector<std::string> items(header.begin() + 1, header.end());
    std::unordered_set<std::string> seen_items;
    for (const std::string& id : items) {
        check_item_token(id, lines.number);
        if (!seen_items.insert(id).second) {
            throw ParseError(lines.number, "duplicate item column " + id);
        }
    }

    std::vector<Transaction> transactions;
    std::unordered_set<Tid> seen_tids;
    while (lines.next(line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() != header.size()) {
            throw ParseError(lines.number, "expected " + std::to_string(header.size()) +
                                               " columns, got " + std::to_string(fields.size()));
        }
        Transaction txn;
        txn.tid = parse_tid(fields[0], lines.number);
        if (!seen_tids.insert(txn.tid).second) {
            throw ParseError(lines.number, "duplicate tid " + std::to_string(txn.tid));
        }
        for (std::size_t i = 1; i < fields.size(); ++i) {
            std::int64_t quantity = parse_integer(fields[i], lines.number, "quantity");
            if (quantity < 0) {
                throw ParseError(lines.number, "negative quantity for item " + items[i - 1]);
            }
            if (quantity > 0) {
                txn.entries.push_back(
                    {static_cast<ItemIndex>(i - 1), static_cast<Quantity>(quantity)});
            }
        }
        if (txn.entries.empty()) {
            throw ParseError(lines.number,
                             "empty transaction " + std::to_string(txn.tid) + " rejected");
        }
        transactions.push_back(std::move(txn));
    }
    return TransactionDataset::create(std::move(items), std::move(transactions));
}

TransactionDataset parse_long(Lines& lines) {
    std::string line;
    if (!lines.next(line)) {
        throw ParseError(1, "missing header");
    }
    if (split_csv(line) != std::vector<std::string>{"tid", "item", "quantity"}) {
        throw ParseError(lines.number, "expected header \"tid,item,quantity\"");
    }

    std::vector<std::string> items;
    std::unordered_map<std::string, ItemIndex> item_index;
    struct PendingTxn {
        Tid tid;
        std::map<ItemIndex, Quantity> cells;
    };
    std::vector<PendingTxn> pending;
    std::unordered_map<Tid, std::size_t> by_tid;

    while (lines.next(line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 3) {
            throw ParseError(lines.number,
                             "expected 3 columns, got " + std::to_string(fields.size()));
        }
        Tid tid = parse_tid(fields[0], lines.number);
        check_item_token(fields[1], lines.number);
        std::int64_t quantity = parse_integer(fields[2], lines.number, "quantity");
        if (quantity < 0) {
            throw ParseError(lines.number, "negative quantity for item " + fields[1]);
        }
        if (quantity == 0) {
            throw ParseError(lines.number, "quantity must be at least 1 in long format");
        }

        auto [it, inserted] = item_index.emplace(fields[1], static_cast<ItemIndex>(items.size()));
        if (inserted) {
            items.push_back(fields[1]);
        }
        auto [tit, new_txn] = by_tid.emplace(tid, pending.size());
        if (new_txn) {
            pending.push_back({tid, {}});
        }
        auto [cell, fresh] = pending[tit->second].cells.emplace(
            it->second, static_cast<Quantity>(quantity));
        if (!fresh) {
            throw ParseError(lines.number, "duplicate row for tid " + std::to_string(tid) +
                                               ", item " + fields[1]);
        }
    }

    std::vector<Transaction> transactions;
    transactions.reserve(pending.size());
    for (PendingTxn& p : pending) {
        Transaction txn;
        txn.tid = p.tid;
        txn.entries.reserve(p.cells.size());
        for (const auto& [item, quantity] : p.cells) {
            txn.entries.push_back({item, quantity});
        }
        transactions.push_back(std::move(txn));
    }
    return TransactionDataset::create(std::move(items), std::move(transactions));
}

}  // namespace

TransactionDataset parse_transactions(std::istream& in, TransactionFormat format) {
    Lines lines{in};
    return format == TransactionFormat::kWide ? parse_wide(lines) : parse_long(lines);
}

UtilityTable parse_utilities(std::istream& in) {
    Lines lines{in};
    std::string line;
    if (!lines.next(line)) {
        throw ParseError(1, "missing header");
    }
    if (split_csv(line) != std::vector<std::string>{"item", "external_utility"}) {
        throw ParseError(lines.number, "expected header \"item,external_utility\"");
    }
    std::vector<std::pair<std::string, Decimal>> entries;
    std::unordered_set<std::string> seen;
    while (lines.next(line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 2) {
            throw ParseError(lines.number,
                             "expected 2 columns, got " + std::to_string(fields.size()));
        }
        check_item_token(fields[0], lines.number);
        if (!seen.insert(fields[0]).second) {
            throw ParseError(lines.number, "duplicate utility entry for item " + fields[0]);
        }
        auto utility = Decimal::parse(fields[1]);
        if (!utility) {
            throw ParseError(lines.number, "external utility is not a number: \"" + fields[1] +
                                               "\" (item " + fields[0] + ")");
        }
        if (utility->is_negative()) {
            throw ParseError(lines.number, "negative external utility for item " + fields[0]);
        }
        entries.emplace_back(fields[0], *utility);
    }
    return UtilityTable::create(std::move(entries));
}

CustomerDirectory parse_customers(std::istream& in) {
    Lines lines{in};
    std::string line;
    if (!lines.next(line)) {
        throw ParseError(1, "missing header");
    }
    if (split_csv(line) != std::vector<std::string>{"tid", "customer_id", "customer_name"}) {
        throw ParseError(lines.number, "expected header \"tid,customer_id,customer_name\"");
    }
    std::vector<CustomerRow> rows;
    std::unordered_set<Tid> seen;
    while (lines.next(line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 3) {
            throw ParseError(lines.number,
                             "expected 3 columns, got " + std::to_string(fields.size()));
        }
        Tid tid = parse_tid(fields[0], lines.number);
        if (!seen.insert(tid).second) {
            throw ParseError(lines.number, "duplicate customer row for tid " + std::to_string(tid));
        }
        if (fields[1].empty()) {
            throw ParseError(lines.number, "empty customer id");
        }
        rows.push_back({tid, fields[1], fields[2]});
    }
    return CustomerDirectory::create(std::move(rows));
}

void emit_transactions(const TransactionDataset& dataset, TransactionFormat format,
                       std::ostream& out) {
    if (format == TransactionFormat::kWide) {
        out << "tid";
        for (const std::string& id : dataset.items()) {
            out << ',' << id;
        }
        out << '\n';
        for (const Transaction& txn : dataset.transactions()) {
            out << txn.tid;
            std::size_t next = 0;
            for (ItemIndex i = 0; i < dataset.item_count(); ++i) {
                Quantity q = 0;
                if (next < txn.entries.size() && txn.entries[next].item == i) {
                    q = txn.entries[next].quantity;
                    ++next;
                }
                out << ',' << q;
            }
            out << '\n';
        }
    } else {
        out << "tid,item,quantity\n";
        for (const Transaction& txn : dataset.transactions()) {
            for (const ItemQuantity& e : txn.entries) {
                out << txn.tid << ',' << dataset.item_id(e.item) << ',' << e.quantity << '\n';
            }
        }
    }
}

void emit_utilities(const UtilityTable& table, std::ostream& out) {
    out << "item,external_utility\n";
    for (const auto& [id, utility] : table.entries()) {
        out << id << ',' << utility.str() << '\n';
    }
}

void emit_customers(const CustomerDirectory& customers, std::ostream& out) {
    out << "tid,customer_id,customer_name\n";
    for (const CustomerRow& row : customers.rows()) {
        out << row.tid << ',' << row.customer_id << ',' << row.customer_name << '\n';
    }
}

std::string format_name(TransactionFormat format) {
    return format == TransactionFormat::kWide ? "wide" : "long";
}

}  // namespace huri
