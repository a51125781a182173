#include "irk/subsemigroup.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "irk/sym_inv.hpp"

namespace irk {

int CayleyTable::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  }
  throw InputError("unknown element label '" + label + "'");
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> parts;
  std::string token;
  while (in >> token) parts.push_back(token);
  return parts;
}

[[noreturn]] void table_fail(int line_no, const std::string& what) {
  throw InputError("table line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

CayleyTable CayleyTable::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::pair<int, std::string>> lines;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    lines.emplace_back(line_no, trimmed);
  }
  if (lines.size() < 2) {
    throw InputError("table: missing 'elements:' and 'inv:' header lines");
  }

  CayleyTable t;
  {
    auto [no, text0] = lines[0];
    if (text0.rfind("elements:", 0) != 0) table_fail(no, "expected 'elements:'");
    t.labels = split_ws(text0.substr(9));
    if (t.labels.empty()) table_fail(no, "no elements listed");
    std::set<std::string> seen(t.labels.begin(), t.labels.end());
    if (seen.size() != t.labels.size()) table_fail(no, "duplicate element label");
  }
  const int n = t.size();
  t.inverse.assign(static_cast<std::size_t>(n), -1);
  {
    auto [no, text1] = lines[1];
    if (text1.rfind("inv:", 0) != 0) table_fail(no, "expected 'inv:'");
    for (const std::string& entry : split_ws(text1.substr(4))) {
      std::size_t arrow = entry.find("->");
      if (arrow == std::string::npos) table_fail(no, "expected 'x->y' in inv");
      try {
        int from = t.index_of(entry.substr(0, arrow));
        int to = t.index_of(entry.substr(arrow + 2));
        t.inverse[static_cast<std::size_t>(from)] = to;
      } catch (const InputError& error) {
        table_fail(no, error.what());
      }
    }
    for (int i = 0; i < n; ++i) {
      if (t.inverse[static_cast<std::size_t>(i)] < 0) {
        table_fail(no, "inverse missing for '" + t.labels[static_cast<std::size_t>(i)] + "'");
      }
    }
  }
  if (static_cast<int>(lines.size()) != 2 + n) {
    throw InputError("table: expected " + std::to_string(n) +
                     " product rows, found " + std::to_string(lines.size() - 2));
  }
  for (int i = 0; i < n; ++i) {
    auto [no, row_text] = lines[static_cast<std::size_t>(2 + i)];
    std::vector<std::string> row = split_ws(row_text);
    if (static_cast<int>(row.size()) != n) {
      table_fail(no, "expected " + std::to_string(n) + " products");
    }
    std::vector<int> products;
    products.reserve(row.size());
    for (const std::string& label : row) {
      try {
        products.push_back(t.index_of(label));
      } catch (const InputError& error) {
        table_fail(no, error.what());
      }
    }
    t.product.push_back(std::move(products));
  }
  TableReport report = verify_inverse_semigroup(t);
  if (!report.valid) {
    throw InputError("table is not an inverse semigroup: " + report.violation);
  }
  return t;
}

CayleyTable CayleyTable::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string CayleyTable::to_text() const {
  std::ostringstream out;
  out << "elements:";
  for (const std::string& label : labels) out << ' ' << label;
  out << "\ninv:";
  for (int i = 0; i < size(); ++i) {
    out << ' ' << labels[static_cast<std::size_t>(i)] << "->"
        << labels[static_cast<std::size_t>(inverse[static_cast<std::size_t>(i)])];
  }
  out << '\n';
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (j > 0) out << ' ';
      out << labels[static_cast<std::size_t>(product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

CayleyTable table_from_model(const InverseAlgebra& A,
                             const std::vector<Element>& elements,
                             const std::vector<std::string>& labels) {
  CayleyTable t;
  t.labels = labels;
  auto index_of = [&](const Element& x) {
    auto it = std::find(elements.begin(), elements.end(), x);
    if (it == elements.end()) throw InternalError("model set is not closed");
    return static_cast<int>(it - elements.begin());
  };
  for (const Element& a : elements) {
    std::vector<int> row;
    row.reserve(elements.size());
    for (const Element& b : elements) row.push_back(index_of(A.compose(a, b)));
    t.product.push_back(std::move(row));
    t.inverse.push_back(index_of(A.inverse(a)));
  }
  return t;
}

}  // namespace

CayleyTable CayleyTable::brandt_b2() {
  auto A = sym_inv_algebra(2);
  const auto& S = *std::static_pointer_cast<const SymInverseAlgebra>(A);
  std::vector<Element> model = {
      S.make({}),                // 0
      S.make({{1, 2}}),          // a
      S.make({{2, 1}}),          // a'
      S.make({{1, 1}}),          // a a'
      S.make({{2, 2}}),          // a' a
  };
  return table_from_model(*A, model, {"0", "a", "a'", "aa'", "a'a"});
}

CayleyTable CayleyTable::chain(int k) {
  if (k < 1) throw InputError("chain(k): k must be positive");
  CayleyTable t;
  for (int i = 1; i <= k; ++i) t.labels.push_back("e" + std::to_string(i));
  for (int i = 0; i < k; ++i) {
    std::vector<int> row;
    for (int j = 0; j < k; ++j) row.push_back(std::max(i, j));
    t.product.push_back(std::move(row));
    t.inverse.push_back(i);
  }
  return t;
}

CayleyTable CayleyTable::trivial_group() {
  CayleyTable t;
  t.labels = {"e"};
  t.product = {{0}};
  t.inverse = {0};
  return t;
}

CayleyTable CayleyTable::with_zero(const CayleyTable& t) {
  CayleyTable out;
  out.labels = t.labels;
  std::string zero_label = "0";
  while (std::find(out.labels.begin(), out.labels.end(), zero_label) !=
         out.labels.end()) {
    zero_label += "_";
  }
  out.labels.push_back(zero_label);
  const int n = t.size();
  for (int i = 0; i < n; ++i) {
    std::vector<int> row = t.product[static_cast<std::size_t>(i)];
    row.push_back(n);
    out.product.push_back(std::move(row));
    out.inverse.push_back(t.inverse[static_cast<std::size_t>(i)]);
  }
  out.product.push_back(std::vector<int>(static_cast<std::size_t>(n) + 1, n));
  out.inverse.push_back(n);
  return out;
}

namespace {

int zero_index_of(const CayleyTable& t) {
  for (int z = 0; z < t.size(); ++z) {
    bool is_zero = true;
    for (int x = 0; x < t.size() && is_zero; ++x) {
      is_zero = t.product[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] == z &&
                t.product[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] == z;
    }
    if (is_zero) return z;
  }
  throw InputError("zero_direct_sum: operand has no zero element");
}

}  // namespace

CayleyTable CayleyTable::zero_direct_sum(const CayleyTable& a, const CayleyTable& b) {
  const int za = zero_index_of(a);
  const int zb = zero_index_of(b);
  CayleyTable out;
  std::vector<int> a_map(static_cast<std::size_t>(a.size()), -1);
  std::vector<int> b_map(static_cast<std::size_t>(b.size()), -1);
  auto add_label = [&](std::string label) {
    while (std::find(out.labels.begin(), out.labels.end(), label) !=
           out.labels.end()) {
      label += "'";
    }
    out.labels.push_back(std::move(label));
    return static_cast<int>(out.labels.size()) - 1;
  };
  const int zero = add_label("0");
  a_map[static_cast<std::size_t>(za)] = zero;
  b_map[static_cast<std::size_t>(zb)] = zero;
  for (int i = 0; i < a.size(); ++i) {
    if (i != za) a_map[static_cast<std::size_t>(i)] = add_label(a.labels[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < b.size(); ++i) {
    if (i != zb) b_map[static_cast<std::size_t>(i)] = add_label(b.labels[static_cast<std::size_t>(i)]);
  }
  const int n = static_cast<int>(out.labels.size());
  out.product.assign(static_cast<std::size_t>(n),
                     std::vector<int>(static_cast<std::size_t>(n), zero));
  out.inverse.assign(static_cast<std::size_t>(n), zero);
  for (int i = 0; i < a.size(); ++i) {
    out.inverse[static_cast<std::size_t>(a_map[static_cast<std::size_t>(i)])] =
        a_map[static_cast<std::size_t>(a.inverse[static_cast<std::size_t>(i)])];
    for (int j = 0; j < a.size(); ++j) {
      out.product[static_cast<std::size_t>(a_map[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(a_map[static_cast<std::size_t>(j)])] =
          a_map[static_cast<std::size_t>(a.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])];
    }
  }
  for (int i = 0; i < b.size(); ++i) {
    out.inverse[static_cast<std::size_t>(b_map[static_cast<std::size_t>(i)])] =
        b_map[static_cast<std::size_t>(b.inverse[static_cast<std::size_t>(i)])];
    for (int j = 0; j < b.size(); ++j) {
      out.product[static_cast<std::size_t>(b_map[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(b_map[static_cast<std::size_t>(j)])] =
          b_map[static_cast<std::size_t>(b.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])];
    }
  }
  return out;
}

CayleyTable CayleyTable::ex1_t6() {
  return zero_direct_sum(brandt_b2(), with_zero(chain(1)));
}

CayleyTable CayleyTable::ex1_t7() {
  return zero_direct_sum(brandt_b2(), with_zero(chain(2)));
}

TableReport verify_inverse_semigroup(const CayleyTable& t) {
  const int n = t.size();
  auto label = [&](int i) { return t.labels[static_cast<std::size_t>(i)]; };
  auto prod = [&](int i, int j) {
    return t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  if (static_cast<int>(t.product.size()) != n ||
      static_cast<int>(t.inverse.size()) != n) {
    return {false, "table is not square"};
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t.product[static_cast<std::size_t>(i)].size()) != n) {
      return {false, "row " + label(i) + " has wrong length"};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (prod(prod(i, j), k) != prod(i, prod(j, k))) {
          return {false, "associativity fails at (" + label(i) + ", " +
                             label(j) + ", " + label(k) + ")"};
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const int v = t.inverse[static_cast<std::size_t>(i)];
    if (prod(prod(i, v), i) != i || prod(prod(v, i), v) != v) {
      return {false, "inverse law fails for " + label(i)};
    }
  }
  for (int i = 0; i < n; ++i) {
    if (prod(i, i) != i) continue;
    for (int j = 0; j < n; ++j) {
      if (prod(j, j) != j) continue;
      if (prod(i, j) != prod(j, i)) {
        return {false, "idempotents " + label(i) + " and " + label(j) +
                           " do not commute"};
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int y = 0; y < n; ++y) {
      if (prod(prod(i, y), i) == i && prod(prod(y, i), y) == y) ++count;
    }
    if (count != 1) {
      return {false, "element " + label(i) + " has " + std::to_string(count) +
                         " inverses"};
    }
  }
  return {};
}

Subsemigroup::Subsemigroup(AlgebraPtr algebra, std::vector<Element> closed_elements,
                           std::vector<Element> generators,
                           std::optional<SourceRep> source)
    : algebra_(std::move(algebra)),
      elements_(std::move(closed_elements)),
      generators_(std::move(generators)),
      source_(std::move(source)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const Element& x : elements_) algebra_->require_owned(x);
}

Subsemigroup Subsemigroup::close(AlgebraPtr algebra, std::vector<Element> generators) {
  if (generators.empty()) {
    throw InputError("close: generator set must be non-empty");
  }
  for (const Element& g : generators) algebra->require_owned(g);
  std::set<Element> seen;
  std::vector<Element> queue;
  auto push = [&](const Element& x) {
    if (seen.insert(x).second) queue.push_back(x);
  };
  for (const Element& g : generators) {
    push(g);
    push(algebra->inverse(g));
  }
  for (std::size_t next = 0; next < queue.size(); ++next) {
    Element current = queue[next];
    for (std::size_t i = 0; i <= next; ++i) {
      push(algebra->compose(current, queue[i]));
      push(algebra->compose(queue[i], current));
    }
  }
  return Subsemigroup(std::move(algebra),
                      std::vector<Element>(seen.begin(), seen.end()),
                      std::move(generators));
}

bool Subsemigroup::contains(const Element& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::vector<Element> Subsemigroup::nonzero_elements() const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (const Element& x : elements_) {
    if (!algebra_->is_zero(x)) out.push_back(x);
  }
  return out;
}

CayleyTable table_of(const Subsemigroup& S) {
  std::vector<std::string> labels;
  labels.reserve(S.size());
  for (const Element& x : S.elements()) labels.push_back(S.algebra().print(x));
  return table_from_model(S.algebra(), S.elements(), labels);
}

Subsemigroup image_of(AlgebraPtr algebra, const CayleyTable& table,
                      const std::map<std::string, Element>& assignment) {
  TableReport report = verify_inverse_semigroup(table);
  if (!report.valid) {
    throw InputError("image_of: table is not an inverse semigroup: " +
                     report.violation);
  }
  const int n = table.size();
  std::vector<std::optional<Element>> rho(static_cast<std::size_t>(n));
  for (const auto& [label, value] : assignment) {
    algebra->require_owned(value);
    rho[static_cast<std::size_t>(table.index_of(label))] = value;
  }
  // Close the assignment under the table's products, checking consistency
  // at every revisit. Inverses are products in an inverse semigroup, but
  // seeding them speeds the fixpoint up and catches mismatches early.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!rho[static_cast<std::size_t>(i)]) continue;
      const int v = table.inverse[static_cast<std::size_t>(i)];
      Element image = algebra->inverse(*rho[static_cast<std::size_t>(i)]);
      if (!rho[static_cast<std::size_t>(v)]) {
        rho[static_cast<std::size_t>(v)] = image;
        changed = true;
      } else if (*rho[static_cast<std::size_t>(v)] != image) {
        throw InputError("image_of: assignment inconsistent with table relations "
                         "(inverse of '" + table.labels[static_cast<std::size_t>(i)] + "')");
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!rho[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < n; ++j) {
        if (!rho[static_cast<std::size_t>(j)]) continue;
        const int p = table.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        Element image = algebra->compose(*rho[static_cast<std::size_t>(i)],
                                         *rho[static_cast<std::size_t>(j)]);
        if (!rho[static_cast<std::size_t>(p)]) {
          rho[static_cast<std::size_t>(p)] = image;
          changed = true;
        } else if (*rho[static_cast<std::size_t>(p)] != image) {
          throw InputError(
              "image_of: assignment inconsistent with table relations ('" +
              table.labels[static_cast<std::size_t>(i)] + "' * '" +
              table.labels[static_cast<std::size_t>(j)] + "')");
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!rho[static_cast<std::size_t>(i)]) {
      throw InputError("image_of: assigned generators do not generate '" +
                       table.labels[static_cast<std::size_t>(i)] + "'");
    }
  }
  SourceRep source;
  source.table = table;
  source.rho.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) source.rho.push_back(*rho[static_cast<std::size_t>(i)]);
  std::set<Element> image_set(source.rho.begin(), source.rho.end());
  source.injective = static_cast<int>(image_set.size()) == n;
  std::vector<Element> generators;
  for (const auto& [label, value] : assignment) generators.push_back(value);
  return Subsemigroup(std::move(algebra),
                      std::vector<Element>(image_set.begin(), image_set.end()),
                      std::move(generators), std::move(source));
}

}  // namespace irk
