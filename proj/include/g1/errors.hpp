#pragma once

#include <stdexcept>
#include <string>

namespace g1 {

/// A computation would exceed a configured size limit (enumeration bound or
/// the hard order cap). `order_info` carries whatever is known about the
/// group order, e.g. "32736" or ">= 1000000001".
class ResourceBoundError : public std::runtime_error {
public:
  ResourceBoundError(const std::string &what, std::string order_info)
      : std::runtime_error(what), order_info_(std::move(order_info)) {}
  const std::string &order_info() const { return order_info_; }

private:
  std::string order_info_;
};

} // namespace g1
