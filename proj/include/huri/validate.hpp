#ifndef HURI_VALIDATE_HPP
#define HURI_VALIDATE_HPP

#include <string>
#include <vector>

#include "huri/types.hpp"

namespace huri {

enum class Severity { kError, kWarning };

struct Issue {
    Severity severity = Severity::kError;
    std::string message;
};

// Cross-checks the inputs without throwing. Errors: items lacking a utility
// entry, a dataset with no transactions. Warnings: a customer_name shared by
// several customer_ids, customer rows referencing unknown tids.
std::vector<Issue> validate(const TransactionDataset& dataset, const UtilityTable& utilities,
                            const CustomerDirectory* customers = nullptr);

bool has_errors(const std::vector<Issue>& issues);

}  // namespace huri

#endif
