#ifndef HURI_SEGMENTATION_HPP
#define HURI_SEGMENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "huri/decimal.hpp"
#include "huri/types.hpp"

namespace huri {

enum class CustomerClass { kPremium, kGeneral };

struct TransactionProfit {
    Tid tid = 0;
    std::optional<std::string> customer_id;
    std::optional<std::string> customer_name;
    Decimal profit;
    CustomerClass customer_class = CustomerClass::kGeneral;
};

enum class AggregationPolicy {
    kAnyPremium,   // a customer is premium if any of their transactions is
    kTotalProfit,  // premium if summed profit exceeds a separate threshold
};

struct CustomerAggregate {
    std::string customer_id;
    std::string customer_name;  // display only, first name seen
    Decimal total_profit;
    std::size_t transaction_count = 0;
    CustomerClass customer_class = CustomerClass::kGeneral;
};

struct SegmentationReport {
    std::vector<TransactionProfit> per_transaction;  // dataset order
    std::vector<CustomerAggregate> per_customer;     // sorted by customer_id
    Decimal threshold;
    AggregationPolicy policy = AggregationPolicy::kAnyPremium;
};

std::string to_string(CustomerClass c);
std::string to_string(AggregationPolicy policy);
std::optional<AggregationPolicy> aggregation_policy_from(std::string_view name);

// Sum over the transaction's items of quantity * external utility, exact.
// `scope` restricts the sum to the given items when non-null (profit scoped
// to high-utility rare items). Throws std::out_of_range when a purchased
// item has no utility entry.
Decimal transaction_utility(const TransactionDataset& dataset, const Transaction& transaction,
                            const UtilityTable& utilities,
                            const std::vector<std::string>* scope = nullptr);

// One row per transaction, classified premium iff profit > threshold,
// strictly. Per-customer aggregates are filled under the any-premium policy
// when a directory is supplied; without one, rows stay anonymous and the
// aggregate list is empty.
SegmentationReport classify_transactions(const TransactionDataset& dataset,
                                         const UtilityTable& utilities,
                                         const CustomerDirectory* customers, Decimal threshold,
                                         const std::vector<std::string>* profit_scope = nullptr);

// Recomputes the per-customer view of a report under the given policy.
// total_threshold is required by (and only by) the total-profit policy.
std::vector<CustomerAggregate> aggregate_customers(
    const SegmentationReport& report, AggregationPolicy policy,
    std::optional<Decimal> total_threshold = std::nullopt);

}  // namespace huri

#endif
