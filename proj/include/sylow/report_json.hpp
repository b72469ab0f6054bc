#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sylow/group_data.hpp"
#include "sylow/order_engine.hpp"
#include "sylow/sylow_analyzer.hpp"

namespace sylow {

/// Everything the CLI prints for one (group, q[, l]) request.
struct Report {
  GroupSpec group;
  QSpec q;
  FactoredOrder order;
  BigInt order_value = 1;
  /// One entry per factor when a Sylow analysis was requested.
  std::optional<std::uint64_t> ell;
  std::vector<SylowReport> sylow;
  BigInt sylow_order = 1;

  friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const GroupSpec& g, const QSpec& q, std::optional<std::uint64_t> ell = std::nullopt);

/// Big integers are written as decimal strings so no precision is lost.
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SylowReport& r);
SylowReport sylow_report_from_json(const nlohmann::json& j, const QSpec& q);

/// `p^a` or `sqrtp^a` (a defaults to 1), or a plain prime power.
QSpec parse_qspec(const std::string& text);

/// Multi-line text form of a Sylow report.
std::string render_text(const SylowReport& r);

} // namespace sylow
