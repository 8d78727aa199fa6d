#include "ua/operation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ua {

Tuple Tuple::from(std::initializer_list<std::pair<int, Element>> xs) {
  Tuple t;
  t.entries.assign(xs.begin(), xs.end());
  std::sort(t.entries.begin(), t.entries.end());
  for (std::size_t i = 1; i < t.entries.size(); ++i)
    if (t.entries[i].first == t.entries[i - 1].first)
      throw std::invalid_argument("tuple assigns a coordinate twice");
  return t;
}

Tuple Tuple::over(const std::vector<int>& support, std::vector<Element> values) {
  if (support.size() != values.size())
    throw std::invalid_argument("tuple/support mismatch");
  Tuple t;
  t.entries.reserve(support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    t.entries.emplace_back(support[i], values[i]);
  return t;
}

std::size_t table_size(int carrier, int arity) {
  if (carrier < 1) throw std::runtime_error("carrier must be positive");
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) {
    if (n > (std::numeric_limits<std::size_t>::max() / 4) / std::size_t(carrier) ||
        n * std::size_t(carrier) > std::size_t(1) << 28)
      throw std::runtime_error("operation table too large (carrier^" +
                               std::to_string(arity) + ")");
    n *= std::size_t(carrier);
  }
  return n;
}

bool valid_support(const std::vector<int>& support) {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 0) return false;
    if (i > 0 && support[i] <= support[i - 1]) return false;
  }
  return true;
}

void validate_operation(const Operation& op) {
  if (op.carrier < 1) throw std::invalid_argument("carrier must be positive");
  if (!valid_support(op.support))
    throw std::invalid_argument("support must be strictly increasing and nonnegative");
  if (op.table.size() != table_size(op.carrier, op.arity()))
    throw std::invalid_argument("table length " + std::to_string(op.table.size()) +
                                " does not match carrier^arity");
  for (Element v : op.table)
    if (v < 0 || v >= op.carrier)
      throw std::invalid_argument("table entry " + std::to_string(v) +
                                  " outside carrier");
}

Element eval(const Operation& op, const Tuple& t) {
  std::size_t idx = 0;
  std::size_t pos = 0;
  for (int coord : op.support) {
    while (pos < t.entries.size() && t.entries[pos].first < coord) ++pos;
    if (pos == t.entries.size() || t.entries[pos].first != coord)
      throw std::invalid_argument("tuple/support mismatch: coordinate " +
                                  std::to_string(coord) + " unassigned");
    Element v = t.entries[pos].second;
    if (v < 0 || v >= op.carrier)
      throw std::invalid_argument("tuple value outside carrier");
    idx = idx * std::size_t(op.carrier) + std::size_t(v);
  }
  return op.table[idx];
}

Element eval_positional(const Operation& op, std::span<const Element> args) {
  if (args.size() != op.support.size())
    throw std::invalid_argument("tuple/support mismatch");
  std::size_t idx = 0;
  for (Element v : args) idx = idx * std::size_t(op.carrier) + std::size_t(v);
  return op.table[idx];
}

Operation substitute(const Operation& op,
                     const std::vector<std::pair<int, int>>& sigma,
                     const std::vector<int>& target) {
  validate_operation(op);
  if (!valid_support(target))
    throw std::invalid_argument("target support must be strictly increasing");

  // Resolve sigma to positions: for each support slot of op, which slot of
  // the target supplies its value.
  std::vector<int> slot(op.support.size(), -1);
  for (std::size_t j = 0; j < op.support.size(); ++j) {
    int image = -1;
    for (auto& [from, to] : sigma)
      if (from == op.support[j]) {
        image = to;
        break;
      }
    if (image < 0)
      throw std::invalid_argument("sigma not total on the support: coordinate " +
                                  std::to_string(op.support[j]) + " unmapped");
    auto it = std::lower_bound(target.begin(), target.end(), image);
    if (it == target.end() || *it != image)
      throw std::invalid_argument("sigma image " + std::to_string(image) +
                                  " outside the target support");
    slot[j] = static_cast<int>(it - target.begin());
  }

  Operation out;
  out.support = target;
  out.carrier = op.carrier;
  out.table.resize(table_size(op.carrier, static_cast<int>(target.size())));

  const int n = op.carrier;
  const int e = static_cast<int>(target.size());
  std::vector<Element> digits(e, 0), args(op.support.size(), 0);
  for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
    std::size_t rest = idx;
    for (int j = e - 1; j >= 0; --j) {
      digits[j] = static_cast<Element>(rest % n);
      rest /= n;
    }
    for (std::size_t j = 0; j < slot.size(); ++j) args[j] = digits[slot[j]];
    out.table[idx] = eval_positional(op, args);
  }
  return out;
}

Operation compose(const Operation& op, std::span<const Operation> inners) {
  validate_operation(op);
  if (inners.size() != op.support.size())
    throw std::invalid_argument("composition needs one inner operation per support coordinate");
  for (const Operation& g : inners) {
    validate_operation(g);
    if (g.carrier != op.carrier)
      throw std::invalid_argument("carrier mismatch in composition");
    if (g.support != inners[0].support)
      throw std::invalid_argument("inner operations must share one support");
  }

  Operation out;
  out.carrier = op.carrier;
  out.support = inners.empty() ? std::vector<int>{} : inners[0].support;
  out.table.resize(inners.empty()
                       ? 1
                       : table_size(op.carrier, static_cast<int>(out.support.size())));

  if (inners.empty()) {
    out.table[0] = op.table[0];
    return out;
  }
  const std::size_t n = std::size_t(op.carrier);
  for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
    std::size_t opidx = 0;
    for (const Operation& g : inners) opidx = opidx * n + std::size_t(g.table[idx]);
    out.table[idx] = op.table[opidx];
  }
  return out;
}

Operation canonicalize(const Operation& op) {
  Operation out = op;
  for (int j = 0; j < out.arity(); ++j) out.support[j] = j;
  return out;
}

Operation projection(int carrier, int arity, int coord) {
  if (coord < 0 || coord >= arity)
    throw std::invalid_argument("projection coordinate outside arity");
  Operation op;
  op.carrier = carrier;
  op.support.resize(arity);
  for (int j = 0; j < arity; ++j) op.support[j] = j;
  op.table.resize(table_size(carrier, arity));
  const std::size_t n = std::size_t(carrier);
  std::size_t weight = 1;
  for (int j = arity - 1; j > coord; --j) weight *= n;
  for (std::size_t idx = 0; idx < op.table.size(); ++idx)
    op.table[idx] = static_cast<Element>(idx / weight % n);
  return op;
}

Operation constant_op(int carrier, int arity, Element value) {
  if (value < 0 || value >= carrier)
    throw std::invalid_argument("constant value outside carrier");
  Operation op;
  op.carrier = carrier;
  op.support.resize(arity);
  for (int j = 0; j < arity; ++j) op.support[j] = j;
  op.table.assign(table_size(carrier, arity), value);
  return op;
}

Operation identity_op(int carrier) { return projection(carrier, 1, 0); }

std::string to_string(const Operation& op) {
  std::string s = "op(support={";
  for (std::size_t j = 0; j < op.support.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(op.support[j]);
  }
  s += "}, table=[";
  for (std::size_t i = 0; i < op.table.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(op.table[i]);
  }
  return s + "])";
}

const Operation* FiniteAlgebra::find(const std::string& name) const {
  for (const NamedOp& n : ops)
    if (n.name == name) return &n.op;
  return nullptr;
}

void validate_algebra(const FiniteAlgebra& a) {
  if (a.carrier < 1) throw std::invalid_argument("carrier must be positive");
  for (const auto& n : a.ops) {
    if (n.name.empty()) throw std::invalid_argument("operation name empty");
    validate_operation(n.op);
    if (n.op.carrier != a.carrier)
      throw std::invalid_argument("operation '" + n.name + "' carrier mismatch");
  }
  for (std::size_t i = 0; i < a.ops.size(); ++i)
    for (std::size_t j = i + 1; j < a.ops.size(); ++j)
      if (a.ops[i].name == a.ops[j].name)
        throw std::invalid_argument("duplicate operation name '" + a.ops[i].name + "'");
}

}  // namespace ua
