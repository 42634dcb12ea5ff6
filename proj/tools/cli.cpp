#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "critnum/error.hpp"
#include "critnum/formulas.hpp"
#include "critnum/json_io.hpp"
#include "critnum/oracle.hpp"
#include "critnum/witness.hpp"

namespace critnum::cli {

namespace {

using nlohmann::json;

enum class Quantity { ChiH, ChiHatH, ChiInterval, ChiHatInterval, ChiHatInterval3, Cr, CrStar, Sumfree };

struct QuantityInfo {
  Quantity id;
  const char* name;
  char parameter;   // 'h', 's', or 0 when the quantity takes none
  bool order_only;  // the closed form depends on n alone
};

constexpr QuantityInfo kQuantities[] = {
    {Quantity::ChiH, "chi_h", 'h', true},
    {Quantity::ChiHatH, "chi_hat_h", 'h', true},
    {Quantity::ChiInterval, "chi_interval", 's', true},
    {Quantity::ChiHatInterval, "chi_hat_interval", 's', false},
    {Quantity::ChiHatInterval3, "chi_hat_interval3", 0, false},
    {Quantity::Cr, "cr", 0, false},
    {Quantity::CrStar, "cr_star", 0, false},
    {Quantity::Sumfree, "sumfree", 0, true},
};

const QuantityInfo& lookup(const std::string& name) {
  for (const auto& q : kQuantities)
    if (name == q.name) return q;
  std::string known;
  for (const auto& q : kQuantities) known += std::string(known.empty() ? "" : ", ") + q.name;
  fail(ErrorCode::ParseError, "unknown quantity '" + name + "' (expected one of " + known + ")");
}

struct RunConfig {
  std::vector<std::string> groups;
  std::string order;
  std::int64_t max_order = 0;
  std::string quantity;
  std::string h;
  std::string s;
  std::string format = "text";
  unsigned workers = 0;
  std::uint64_t max_n = 0;
  bool budget_ack = false;
  std::string quotient;
  std::string c_vector;
};

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

std::int64_t parse_int(const std::string& text, std::size_t offset, std::size_t len, const std::string& flag) {
  std::int64_t value = 0;
  const char* first = text.data() + offset;
  const char* last = first + len;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || len == 0) {
    fail(ErrorCode::ParseError, flag + " '" + text + "': expected an integer at position " +
                                    std::to_string(offset + static_cast<std::size_t>(ptr - first)));
  }
  return value;
}

/// "k" or "lo..hi", inclusive.
Range parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text, 0, text.size(), flag);
    return {v, v};
  }
  const Range r{parse_int(text, 0, dots, flag), parse_int(text, dots + 2, text.size() - dots - 2, flag)};
  if (r.lo > r.hi) fail(ErrorCode::ParseError, flag + " '" + text + "': empty range");
  return r;
}

std::vector<std::int64_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    out.push_back(parse_int(text, pos, comma - pos, flag));
    pos = comma + 1;
  }
  return out;
}

struct Target {
  std::optional<GroupType> type;  // absent for order-only rows
  std::uint64_t n;

  std::string label() const { return type ? type->to_string() : "*"; }
};

Range order_range(const RunConfig& cfg) {
  if (!cfg.order.empty() && cfg.max_order != 0) {
    fail(ErrorCode::ParseError, "--order and --max-order are mutually exclusive");
  }
  const Range r = !cfg.order.empty() ? parse_range(cfg.order, "--order") : Range{2, cfg.max_order};
  if (r.lo < 2) fail(ErrorCode::InvalidOrder, "group order " + std::to_string(r.lo) + " must be >= 2");
  return r;
}

std::vector<Target> resolve_targets(const RunConfig& cfg, bool per_type) {
  std::vector<Target> out;
  if (!cfg.groups.empty()) {
    if (!cfg.order.empty() || cfg.max_order != 0) {
      fail(ErrorCode::ParseError, "--group cannot be combined with --order or --max-order");
    }
    for (const auto& literal : cfg.groups) {
      const auto t = GroupType::parse(literal);
      out.push_back({t, t.order()});
    }
    return out;
  }
  if (cfg.order.empty() && cfg.max_order == 0) {
    fail(ErrorCode::ParseError, "one of --group, --order or --max-order is required");
  }
  const auto r = order_range(cfg);
  for (auto n = r.lo; n <= r.hi; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    if (!per_type) {
      out.push_back({std::nullopt, un});
      continue;
    }
    for (const auto& t : types_of_order(un)) out.push_back({t, un});
  }
  return out;
}

std::vector<int> resolve_parameters(const RunConfig& cfg, const QuantityInfo& q) {
  if (q.id == Quantity::ChiHatInterval3) return {3};
  if (q.parameter == 0) return {0};
  const std::string& text = q.parameter == 'h' ? cfg.h : cfg.s;
  const std::string flag = std::string("--") + q.parameter;
  if (text.empty()) fail(ErrorCode::ParseError, flag + " is required for " + q.name);
  const auto r = parse_range(text, flag);
  std::vector<int> out;
  for (auto p = r.lo; p <= r.hi; ++p) out.push_back(static_cast<int>(p));
  return out;
}

OracleOptions oracle_options(const RunConfig& cfg, bool sweep) {
  if (cfg.max_n != 0 && !cfg.budget_ack) {
    fail(ErrorCode::BudgetExceeded, "--max-n changes the oracle budget and requires --budget-ack");
  }
  OracleOptions opt;
  opt.workers = cfg.workers != 0 ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  opt.budget = OracleBudget::from_env(sweep, cfg.max_n);
  return opt;
}

// ---- closed forms ---------------------------------------------------------

struct FormulaValue {
  std::int64_t value;
  std::string branch;
  json extra = json::object();
};

std::string divisor_branch(const std::vector<std::int64_t>& maximizers) {
  std::string out = "d=";
  for (std::size_t i = 0; i < maximizers.size(); ++i) out += (i ? "/" : "") + std::to_string(maximizers[i]);
  return out;
}

FormulaValue chi_hat_interval_closed_form(const GroupType& t, int s) {
  const auto n = static_cast<std::int64_t>(t.order());
  if (s < 1) fail(ErrorCode::InvalidS, "s = " + std::to_string(s) + " must be >= 1");
  if (t.is_cyclic()) return {chi_hat_cyclic(n, s), "cyclic"};
  if (t.is_elementary_abelian_2() && s >= 2) {
    return {chi_hat_2group(static_cast<std::int64_t>(t.rank()), s), "elementary-2"};
  }
  if (s == 1) return {n, "s=1"};
  if (s == 2) return {n / 2 + 1, "s=2"};
  if (s == 3) {
    const auto d = chi_hat_interval3_detail(t);
    return {d.value, d.subgroup_order ? "m=" + std::to_string(*d.subgroup_order) : "no-subgroup"};
  }
  fail(ErrorCode::OutsideTheoremDomain,
       "no closed form for chi_hat_interval with s = " + std::to_string(s) + " on " + t.to_string());
}

FormulaValue evaluate(const QuantityInfo& q, const Target& target, int p) {
  const auto n = static_cast<std::int64_t>(target.n);
  switch (q.id) {
    case Quantity::ChiH:
      return {chi_h(n, p), divisor_branch(v_detail(n, p).maximizers)};
    case Quantity::ChiHatH:
      return {chi_hat_h(n, p), divisor_branch(v_detail(n, p).maximizers)};
    case Quantity::ChiInterval:
      return {chi_interval(n, p), divisor_branch(v_detail(n, p).maximizers)};
    case Quantity::ChiHatInterval:
      return chi_hat_interval_closed_form(*target.type, p);
    case Quantity::ChiHatInterval3: {
      const auto d = chi_hat_interval3_detail(*target.type);
      return {d.value, d.subgroup_order ? "m=" + std::to_string(*d.subgroup_order) : "no-subgroup"};
    }
    case Quantity::Cr:
    case Quantity::CrStar: {
      const auto pair = cr_pair(*target.type);
      FormulaValue out{q.id == Quantity::Cr ? pair.cr : pair.cr_star, pair.sqrt_branch ? "sqrt" : "smallest-prime"};
      out.extra["cr"] = pair.cr;
      out.extra["cr_star"] = pair.cr_star;
      return out;
    }
    case Quantity::Sumfree:
      return {sumfree_bound(n), divisor_branch(v_detail(n, 3).maximizers)};
  }
  fail(ErrorCode::ParseError, "unhandled quantity");
}

CriticalKind oracle_kind(const QuantityInfo& q, int p) {
  switch (q.id) {
    case Quantity::ChiH: return CriticalKind::chi_h(p);
    case Quantity::ChiHatH: return CriticalKind::chi_hat_h(p);
    case Quantity::ChiInterval: return CriticalKind::chi_interval(p);
    case Quantity::ChiHatInterval:
    case Quantity::ChiHatInterval3: return CriticalKind::chi_hat_interval(p);
    case Quantity::Cr: return CriticalKind::cr();
    case Quantity::CrStar: return CriticalKind::cr_star();
    case Quantity::Sumfree: break;
  }
  fail(ErrorCode::ParseError, std::string("quantity ") + q.name + " has no oracle kind");
}

bool is_domain_error(ErrorCode code) {
  return code == ErrorCode::OutsideTheoremDomain || code == ErrorCode::OutsideValidatedDomain ||
         code == ErrorCode::WrongGroupClass;
}

// ---- tables ---------------------------------------------------------------

struct Row {
  std::string group;
  std::uint64_t n = 0;
  std::string quantity;
  std::optional<int> param;
  std::optional<std::int64_t> formula;
  std::optional<std::int64_t> oracle;
  std::optional<bool> witness_ok;
  std::string branch;
  std::string status;  // verify only: ok, mismatch, excluded
  json extra = json::object();
};

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  fail(ErrorCode::ParseError, "unknown format '" + f + "'");
}

template <typename T>
std::string cell(const std::optional<T>& v, const char* missing) {
  if (!v) return missing;
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else {
    return std::to_string(*v);
  }
}

void emit(const std::vector<Row>& rows, Format format, bool with_status, std::ostream& out) {
  if (format == Format::Json) {
    auto arr = json::array();
    for (const auto& r : rows) {
      json j = r.extra;
      j["group"] = r.group;
      j["n"] = r.n;
      j["quantity"] = r.quantity;
      j["param"] = r.param ? json(*r.param) : json(nullptr);
      j["formula"] = r.formula ? json(*r.formula) : json(nullptr);
      j["oracle"] = r.oracle ? json(*r.oracle) : json(nullptr);
      j["witness_ok"] = r.witness_ok ? json(*r.witness_ok) : json(nullptr);
      j["branch"] = r.branch;
      if (with_status) j["status"] = r.status;
      arr.push_back(std::move(j));
    }
    out << dump_readable(arr) << "\n";
    return;
  }

  std::vector<std::string> header{"group", "n", "quantity", "param", "formula", "oracle", "witness_ok", "branch"};
  if (with_status && format == Format::Text) header.push_back("status");
  const char* missing = format == Format::Csv ? "" : "-";
  std::vector<std::vector<std::string>> table{header};
  for (const auto& r : rows) {
    std::vector<std::string> line{r.group,           std::to_string(r.n),         r.quantity,
                                  cell(r.param, missing), cell(r.formula, missing), cell(r.oracle, missing),
                                  cell(r.witness_ok, missing), r.branch};
    if (with_status && format == Format::Text) line.push_back(r.status);
    table.push_back(std::move(line));
  }

  if (format == Format::Csv) {
    for (const auto& line : table) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        const bool quote = line[i].find(',') != std::string::npos;
        out << (i ? "," : "") << (quote ? "\"" + line[i] + "\"" : line[i]);
      }
      out << "\n";
    }
    return;
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : table) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << text << "\n";
  }
}

Row base_row(const Target& t, const QuantityInfo& q, int p) {
  Row row;
  row.group = t.label();
  row.n = t.n;
  row.quantity = q.name;
  if (q.parameter != 0 || q.id == Quantity::ChiHatInterval3) row.param = p;
  return row;
}

// ---- subcommands ----------------------------------------------------------

int cmd_formula(const RunConfig& cfg, std::ostream& out) {
  const auto& q = lookup(cfg.quantity);
  const auto targets = resolve_targets(cfg, !q.order_only);
  const auto params = resolve_parameters(cfg, q);
  const bool single = targets.size() == 1 && params.size() == 1;
  std::vector<Row> rows;
  for (const auto& t : targets) {
    for (int p : params) {
      auto row = base_row(t, q, p);
      try {
        auto f = evaluate(q, t, p);
        row.formula = f.value;
        row.branch = std::move(f.branch);
        row.extra = std::move(f.extra);
      } catch (const Error& e) {
        if (single || !is_domain_error(e.code())) throw;
        row.branch = "excluded (" + std::string(to_string(e.code())) + ")";
      }
      rows.push_back(std::move(row));
    }
  }
  emit(rows, parse_format(cfg.format), false, out);
  return 0;
}

void witness_check(const QuantityInfo& q, const GroupType& type, int p, Row& row) {
  switch (q.id) {
    case Quantity::ChiH:
    case Quantity::ChiHatH: {
      const auto cert = witness_chi_hat_h(type, p);
      row.witness_ok = cert.ok() && row.oracle && cert.claimed_size + 1 == *row.oracle;
      row.extra["witness_branch"] = cert.branch;
      return;
    }
    case Quantity::ChiHatInterval:
    case Quantity::ChiHatInterval3: {
      const auto cert = prop_bound_search(type, p);
      row.witness_ok = cert.ok() && row.oracle && cert.bound <= *row.oracle;
      row.extra["bound"] = cert.bound;
      return;
    }
    default:
      return;
  }
}

std::string reproduction(const QuantityInfo& q, const Row& row) {
  std::string cmd = std::string("critnum verify --quantity ") + q.name + " --group " + row.group;
  if (q.parameter != 0 && row.param) cmd += std::string(" --") + q.parameter + " " + std::to_string(*row.param);
  return cmd;
}

void report_mismatch(const QuantityInfo& q, const Row& row, std::ostream& err) {
  err << "mismatch: group=" << row.group << " n=" << row.n << " quantity=" << row.quantity
      << " param=" << cell(row.param, "-") << " formula=" << cell(row.formula, "-")
      << " oracle=" << cell(row.oracle, "-") << " witness_ok=" << cell(row.witness_ok, "-");
  if (row.extra.contains("extremal_hex")) err << " extremal_hex=" << row.extra["extremal_hex"].get<std::string>();
  err << "\n  reproduce: " << reproduction(q, row) << "\n";
}

int cmd_sumfree(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.groups.empty()) fail(ErrorCode::ParseError, "sumfree takes --order or --max-order, not --group");
  const auto targets = resolve_targets(cfg, false);
  const auto opt = oracle_options(cfg, false);
  const auto& q = lookup("sumfree");
  std::vector<Row> rows;
  std::size_t mismatches = 0;
  try {
    for (const auto& t : targets) {
      auto row = base_row(t, q, 0);
      const auto f = evaluate(q, t, 0);
      row.formula = f.value;
      row.branch = f.branch;
      row.oracle = brute_max_sumfree(static_cast<std::int64_t>(t.n), opt);
      row.status = row.formula == row.oracle ? "ok" : "mismatch";
      if (row.status == "mismatch") {
        ++mismatches;
        err << "mismatch: n=" << row.n << " formula=" << *row.formula << " oracle=" << *row.oracle
            << "\n  reproduce: critnum sumfree --order " << row.n << "\n";
      }
      rows.push_back(std::move(row));
    }
  } catch (...) {
    emit(rows, parse_format(cfg.format), true, out);
    throw;
  }
  emit(rows, parse_format(cfg.format), true, out);
  return mismatches == 0 ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& q = lookup(cfg.quantity);
  if (q.id == Quantity::Sumfree) return cmd_sumfree(cfg, out, err);
  const auto targets = resolve_targets(cfg, true);
  const auto params = resolve_parameters(cfg, q);
  const auto opt = oracle_options(cfg, targets.size() > 1);
  const auto format = parse_format(cfg.format);

  std::vector<Row> rows;
  std::size_t mismatches = 0, excluded = 0;
  try {
    for (const auto& t : targets) {
      for (int p : params) {
        auto row = base_row(t, q, p);
        bool domain_excluded = false;
        try {
          auto f = evaluate(q, t, p);
          row.formula = f.value;
          row.branch = std::move(f.branch);
          row.extra = std::move(f.extra);
        } catch (const Error& e) {
          if (!is_domain_error(e.code())) throw;
          domain_excluded = true;
          row.branch = "excluded (" + std::string(to_string(e.code())) + ")";
          if (e.code() == ErrorCode::OutsideValidatedDomain && q.id == Quantity::ChiHatInterval3) {
            const auto expr = chi_hat_interval3_unguarded(*t.type).value;
            row.extra["formula_unguarded"] = expr;
            row.branch = "excluded (OutsideValidatedDomain; expression gives " + std::to_string(expr) + ")";
          }
        }
        const auto brute = brute_critical({*t.type, oracle_kind(q, p)}, opt);
        row.oracle = brute.value;
        if (brute.extremal) row.extra["extremal_hex"] = brute.extremal->to_hex();
        witness_check(q, *t.type, p, row);

        const bool witness_fine = row.witness_ok.value_or(true);
        if (domain_excluded) {
          row.status = witness_fine ? "excluded" : "mismatch";
        } else {
          row.status = (row.formula == row.oracle && witness_fine) ? "ok" : "mismatch";
        }
        if (row.status == "mismatch") {
          ++mismatches;
          report_mismatch(q, row, err);
        }
        if (row.status == "excluded") ++excluded;
        rows.push_back(std::move(row));
      }
    }
  } catch (...) {
    emit(rows, format, true, out);
    err << "verify: aborted after " << rows.size() << " rows\n";
    throw;
  }
  emit(rows, format, true, out);
  err << "verify: " << rows.size() << " rows, " << mismatches << " mismatches, " << excluded << " excluded\n";
  return mismatches == 0 ? 0 : 1;
}

GroupType single_group(const RunConfig& cfg) {
  if (cfg.groups.size() != 1) fail(ErrorCode::ParseError, "exactly one --group is required");
  return GroupType::parse(cfg.groups.front());
}

int single_parameter(const std::string& text, const std::string& flag) {
  if (text.empty()) fail(ErrorCode::ParseError, flag + " is required");
  const auto r = parse_range(text, flag);
  if (r.lo != r.hi) fail(ErrorCode::ParseError, flag + " takes a single value here");
  return static_cast<int>(r.lo);
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const auto cert = witness_chi_hat_h(single_group(cfg), single_parameter(cfg.h, "--h"));
  out << dump_readable(to_json(cert)) << "\n";
  return cert.ok() ? 0 : 1;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const auto g = single_group(cfg);
  const int s = single_parameter(cfg.s, "--s");
  if (cfg.quotient.empty() != cfg.c_vector.empty()) {
    fail(ErrorCode::ParseError, "--quotient and --c must be given together");
  }
  const auto cert = cfg.quotient.empty()
                        ? prop_bound_search(g, s)
                        : witness_prop_bound(g, parse_list(cfg.quotient, "--quotient"), parse_list(cfg.c_vector, "--c"), s);
  out << dump_readable(to_json(cert)) << "\n";
  return cert.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical numbers of finite abelian groups: closed forms, exhaustive checks and certificates",
               "critnum"};
  // --h is a parameter flag here, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_groups = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.groups, "group literal: n (cyclic) or a,b,c (product); repeatable");
    sub->add_option("--order,--orders", cfg.order, "order or range lo..hi; expands to every abelian type");
    sub->add_option("--max-order", cfg.max_order, "shorthand for --order 2..N");
  };
  const auto add_quantity = [&](CLI::App* sub) {
    sub->add_option("--quantity", cfg.quantity,
                    "chi_h | chi_hat_h | chi_interval | chi_hat_interval | chi_hat_interval3 | cr | cr_star | sumfree")
        ->required();
    sub->add_option("--h", cfg.h, "h or range lo..hi");
    sub->add_option("--s", cfg.s, "s or range lo..hi");
    sub->add_option("--format", cfg.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  };
  const auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "oracle worker threads (default: all cores)");
    sub->add_option("--max-n", cfg.max_n, "raise or lower the oracle order budget (needs --budget-ack)");
    sub->add_flag("--budget-ack", cfg.budget_ack, "acknowledge a non-default oracle budget");
  };

  auto* formula = app.add_subcommand("formula", "evaluate closed forms");
  add_groups(formula);
  add_quantity(formula);

  auto* verify = app.add_subcommand("verify", "compare closed forms with the exhaustive oracle and witnesses");
  add_groups(verify);
  add_quantity(verify);
  add_oracle(verify);

  auto* witness = app.add_subcommand("witness", "emit a generating incomplete set for hA as JSON");
  witness->add_option("--group", cfg.groups, "group literal")->required();
  witness->add_option("--h", cfg.h, "h")->required();

  auto* bound = app.add_subcommand("bound", "emit the best quotient lower-bound certificate for [0,s]A as JSON");
  bound->add_option("--group", cfg.groups, "group literal")->required();
  bound->add_option("--s", cfg.s, "s")->required();
  bound->add_option("--quotient", cfg.quotient, "explicit quotient type d1,...,dt");
  bound->add_option("--c", cfg.c_vector, "explicit c-vector c1,...,ct");

  auto* sumfree = app.add_subcommand("sumfree", "largest sum-free subsets of Z_n: formula and search");
  sumfree->add_option("--order,--orders", cfg.order, "n or range lo..hi");
  sumfree->add_option("--max-order", cfg.max_order, "shorthand for --order 2..N");
  sumfree->add_option("--format", cfg.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  add_oracle(sumfree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (formula->parsed()) return cmd_formula(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (witness->parsed()) return cmd_witness(cfg, out);
    if (bound->parsed()) return cmd_bound(cfg, out);
    if (sumfree->parsed()) return cmd_sumfree(cfg, out, err);
  } catch (const Error& e) {
    out.flush();
    err << "critnum: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out.flush();
    err << "critnum: internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace critnum::cli
