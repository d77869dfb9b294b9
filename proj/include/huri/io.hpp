#ifndef HURI_IO_HPP
#define HURI_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "huri/types.hpp"

namespace huri {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_ = 0;
};

enum class TransactionFormat {
    kLong,  // header "tid,item,quantity", one row per purchased item
    kWide,  // header "tid,<item>,...", integer cell per item, 0 = absent
};

// All parsers accept LF or CRLF endings and a UTF-8 BOM on the first line,
// and throw ParseError with the offending line number.
TransactionDataset parse_transactions(std::istream& in, TransactionFormat format);
UtilityTable parse_utilities(std::istream& in);
CustomerDirectory parse_customers(std::istream& in);

void emit_transactions(const TransactionDataset& dataset, TransactionFormat format,
                       std::ostream& out);
void emit_utilities(const UtilityTable& table, std::ostream& out);
void emit_customers(const CustomerDirectory& customers, std::ostream& out);

std::string format_name(TransactionFormat format);

}  // namespace huri

#endif
