#include "huri/segmentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace huri {

std::string to_string(CustomerClass c) {
    return c == CustomerClass::kPremium ? "premium" : "general";
}

std::string to_string(AggregationPolicy policy) {
    return policy == AggregationPolicy::kAnyPremium ? "any_premium" : "total_profit";
}

std::optional<AggregationPolicy> aggregation_policy_from(std::string_view name) {
    if (name == "any_premium") {
        return AggregationPolicy::kAnyPremium;
    }
    if (name == "total_profit") {
        return AggregationPolicy::kTotalProfit;
    }
    return std::nullopt;
}

Decimal transaction_utility(const TransactionDataset& dataset, const Transaction& transaction,
                            const UtilityTable& utilities,
                            const std::vector<std::string>* scope) {
    Decimal profit;
    for (const ItemQuantity& e : transaction.entries) {
        const std::string& id = dataset.item_id(e.item);
        if (scope != nullptr && !std::binary_search(scope->begin(), scope->end(), id)) {
            continue;
        }
        profit += utilities.external_utility(id) * static_cast<std::int64_t>(e.quantity);
    }
    return profit;
}

SegmentationReport classify_transactions(const TransactionDataset& dataset,
                                         const UtilityTable& utilities,
                                         const CustomerDirectory* customers, Decimal threshold,
                                         const std::vector<std::string>* profit_scope) {
    if (threshold.is_negative()) {
        throw std::invalid_argument("customer utility threshold must be non-negative");
    }
    std::vector<std::string> sorted_scope;
    if (profit_scope != nullptr) {
        sorted_scope = *profit_scope;
        std::sort(sorted_scope.begin(), sorted_scope.end());
    }

    SegmentationReport report;
    report.threshold = threshold;
    report.policy = AggregationPolicy::kAnyPremium;
    report.per_transaction.reserve(dataset.size());

    for (const Transaction& txn : dataset.transactions()) {
        TransactionProfit row;
        row.tid = txn.tid;
        row.profit = transaction_utility(dataset, txn, utilities,
                                         profit_scope != nullptr ? &sorted_scope : nullptr);
        row.customer_class =
            row.profit > threshold ? CustomerClass::kPremium : CustomerClass::kGeneral;
        if (customers != nullptr) {
            if (const CustomerRow* c = customers->find(txn.tid)) {
                row.customer_id = c->customer_id;
                row.customer_name = c->customer_name;
            }
        }
        report.per_transaction.push_back(std::move(row));
    }

    if (customers != nullptr) {
        report.per_customer = aggregate_customers(report, AggregationPolicy::kAnyPremium);
    }
    return report;
}

std::vector<CustomerAggregate> aggregate_customers(const SegmentationReport& report,
                                                   AggregationPolicy policy,
                                                   std::optional<Decimal> total_threshold) {
    if (policy == AggregationPolicy::kTotalProfit && !total_threshold) {
        throw std::invalid_argument("total-profit aggregation needs a total threshold");
    }

    std::map<std::string, CustomerAggregate> by_id;
    for (const TransactionProfit& row : report.per_transaction) {
        if (!row.customer_id) {
            continue;
        }
        CustomerAggregate& agg = by_id[*row.customer_id];
        if (agg.transaction_count == 0) {
            agg.customer_id = *row.customer_id;
            agg.customer_name = row.customer_name.value_or("");
        }
        agg.total_profit += row.profit;
        agg.transaction_count += 1;
        if (policy == AggregationPolicy::kAnyPremium &&
            row.customer_class == CustomerClass::kPremium) {
            agg.customer_class = CustomerClass::kPremium;
        }
    }
    if (policy == AggregationPolicy::kTotalProfit) {
        for (auto& [id, agg] : by_id) {
            agg.customer_class = agg.total_profit > *total_threshold ? CustomerClass::kPremium
                                                                     : CustomerClass::kGeneral;
        }
    }

    std::vector<CustomerAggregate> out;
    out.reserve(by_id.size());
    for (auto& [id, agg] : by_id) {
        out.push_back(std::move(agg));
    }
    return out;
}

}  // namespace huri
