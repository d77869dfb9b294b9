#include "huri/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace huri {

std::vector<Issue> validate(const TransactionDataset& dataset, const UtilityTable& utilities,
                            const CustomerDirectory* customers) {
    std::vector<Issue> issues;

    if (dataset.size() == 0) {
        issues.push_back({Severity::kError, "dataset contains no transactions"});
    }
    for (const std::string& id : dataset.items()) {
        if (!utilities.contains(id)) {
            issues.push_back({Severity::kError, "item " + id + " has no external utility entry"});
        }
    }

    if (customers != nullptr) {
        std::set<Tid> tids;
        for (const Transaction& txn : dataset.transactions()) {
            tids.insert(txn.tid);
        }
        std::map<std::string, std::set<std::string>> ids_by_name;
        for (const CustomerRow& row : customers->rows()) {
            if (!row.customer_name.empty()) {
                ids_by_name[row.customer_name].insert(row.customer_id);
            }
            if (!tids.contains(row.tid)) {
                issues.push_back({Severity::kWarning, "customer row for tid " +
                                                          std::to_string(row.tid) +
                                                          " matches no transaction"});
            }
        }
        for (const auto& [name, ids] : ids_by_name) {
            if (ids.size() > 1) {
                std::string list;
                for (const std::string& id : ids) {
                    list += list.empty() ? id : ", " + id;
                }
                issues.push_back({Severity::kWarning, "customer name " + name +
                                                          " is shared by ids " + list});
            }
        }
    }
    return issues;
}

bool has_errors(const std::vector<Issue>& issues) {
    return std::any_of(issues.begin(), issues.end(),
                       [](const Issue& i) { return i.severity == Severity::kError; });
}

}  // namespace huri
