#include "ua/set_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "ua/free_set.hpp"

namespace ua {

void validate_family(const SubsetFamily& f) {
  if (f.base_size < 0) throw std::invalid_argument("family base size negative");
  for (const auto& m : f.members)
    if (m.universe() != f.base_size)
      throw std::invalid_argument("family member universe differs from base size");
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j)
      if (f.members[i] == f.members[j])
        throw std::invalid_argument("family members must be pairwise distinct");
  if (!f.labels.empty() && f.labels.size() != f.members.size())
    throw std::invalid_argument("family labels must be absent or one per member");
}

FamilyVerdict is_independent_family(const SubsetFamily& f) {
  validate_family(f);
  const int k = static_cast<int>(f.members.size());
  if (k > 20)
    throw std::runtime_error("independence check refuses families above 20 members");

  std::vector<bool> present(std::size_t(1) << k, false);
  for (int p = 0; p < f.base_size; ++p) {
    std::uint32_t sig = 0;
    for (int i = 0; i < k; ++i)
      if (f.members[std::size_t(i)].contains(p)) sig |= std::uint32_t(1) << i;
    present[sig] = true;
  }
  for (std::uint32_t pat = 0; pat < (std::uint32_t(1) << k); ++pat)
    if (!present[pat]) return {false, pat};
  return {true, std::nullopt};
}

SubsetFamily coordinate_family(int m) {
  if (m < 0 || m > 20) throw std::invalid_argument("coordinate_family needs 0 <= m <= 20");
  SubsetFamily f;
  f.base_size = 1 << m;
  for (int i = 0; i < m; ++i) {
    Subset s(f.base_size);
    for (int p = 0; p < f.base_size; ++p)
      if (p >> i & 1) s.add(p);
    f.members.push_back(std::move(s));
    f.labels.push_back("U" + std::to_string(i));
  }
  return f;
}

SubsetFamily hausdorff_family(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("hausdorff_family needs 1 <= n <= 3");

  // F blocks ordered by (|F|, F lexicographic as a sorted list)
  std::vector<std::vector<int>> fs;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) f.push_back(i);
    fs.push_back(std::move(f));
  }
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  struct Point {
    const std::vector<int>* f;
    std::uint32_t gmask;  // bit b: the subset {f[i] : bit i of b} belongs to G
  };
  std::vector<Point> points;
  for (const auto& f : fs) {
    const std::uint32_t variants = std::uint32_t(1) << (1 << f.size());
    for (std::uint32_t g = 0; g < variants; ++g) points.push_back({&f, g});
  }

  SubsetFamily fam;
  fam.base_size = static_cast<int>(points.size());
  for (int amask = 0; amask < (1 << n); ++amask) {
    Subset s(fam.base_size);
    for (int p = 0; p < fam.base_size; ++p) {
      const Point& pt = points[std::size_t(p)];
      std::uint32_t b = 0;  // A intersect F, as positions inside F
      for (std::size_t i = 0; i < pt.f->size(); ++i)
        if (amask >> (*pt.f)[i] & 1) b |= std::uint32_t(1) << i;
      if (pt.gmask >> b & 1) s.add(p);
    }
    fam.members.push_back(std::move(s));
    std::string label = "U{";
    bool first = true;
    for (int i = 0; i < n; ++i)
      if (amask >> i & 1) {
        label += (first ? "" : ",") + std::to_string(i);
        first = false;
      }
    fam.labels.push_back(label + "}");
  }
  validate_family(fam);
  return fam;
}

std::vector<PowerElement> family_to_functions(const SubsetFamily& f) {
  validate_family(f);
  std::vector<PowerElement> out;
  for (const auto& m : f.members) {
    PowerElement chi(std::size_t(f.base_size), 0);
    for (int p = 0; p < f.base_size; ++p)
      if (m.contains(p)) chi[std::size_t(p)] = 1;
    out.push_back(std::move(chi));
  }
  return out;
}

SubsetFamily functions_to_family(const std::vector<PowerElement>& fs) {
  SubsetFamily fam;
  if (!fs.empty()) fam.base_size = static_cast<int>(fs.front().size());
  for (const auto& f : fs) {
    if (static_cast<int>(f.size()) != fam.base_size)
      throw std::invalid_argument("family functions must share one length");
    Subset s(fam.base_size);
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (f[p] != 0 && f[p] != 1)
        throw std::invalid_argument("family functions must be 0/1-valued");
      if (f[p] == 1) s.add(static_cast<int>(p));
    }
    fam.members.push_back(std::move(s));
  }
  validate_family(fam);
  return fam;
}

bool check_family_freeness_agreement(const SubsetFamily& f) {
  validate_family(f);
  if (f.members.size() > 3)
    throw std::runtime_error("freeness agreement check needs at most 3 members");
  if (f.base_size < 1 || f.base_size > 8)
    throw std::runtime_error("freeness agreement check needs base size in [1, 8]");

  const bool independent = is_independent_family(f).independent;
  const int cap = std::max<int>(1, static_cast<int>(f.members.size()));
  const bool free = verify_free_in_power(boolean_clone_slice(cap),
                                         family_to_functions(f)).holds;
  return independent == free;
}

}  // namespace ua
