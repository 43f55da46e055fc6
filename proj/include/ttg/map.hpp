#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/space.hpp"

namespace ttg {

// A specialization-preserving function between finite spectral spaces.
// Monotonicity is continuity here, and on finite spaces every continuous
// map is automatically spectral.
class SpectralMapData {
public:
  SpectralMapData(FiniteSpectralSpace domain, FiniteSpectralSpace codomain,
                  std::vector<PointIndex> assignment)
      : domain_(std::move(domain)), codomain_(std::move(codomain)),
        assignment_(std::move(assignment)) {
    validate();
  }

  SpectralMapData(FiniteSpectralSpace domain, FiniteSpectralSpace codomain,
                  const std::map<std::string, std::string>& assignment_by_id)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    assignment_.resize(domain_.size());
    std::vector<char> seen(domain_.size(), 0);
    for (const auto& [a, b] : assignment_by_id) {
      PointIndex x = domain_.index(a);
      assignment_[x] = codomain_.index(b);
      seen[x] = 1;
    }
    for (std::size_t x = 0; x < domain_.size(); ++x)
      if (!seen[x])
        throw InputError("assignment missing for point '" + domain_.id(x) + "'");
    validate();
  }

  const FiniteSpectralSpace& domain() const { return domain_; }
  const FiniteSpectralSpace& codomain() const { return codomain_; }

  PointIndex operator()(PointIndex x) const { return assignment_.at(x); }
  const std::vector<PointIndex>& assignment() const { return assignment_; }

  PointSet fiber(PointIndex y) const {
    PointSet out;
    for (std::size_t x = 0; x < domain_.size(); ++x)
      if (assignment_[x] == y) out.push_back(x);
    return out;
  }

  bool is_surjective() const {
    std::vector<char> hit(codomain_.size(), 0);
    for (auto y : assignment_) hit[y] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }

  bool is_injective() const {
    std::vector<char> hit(codomain_.size(), 0);
    for (auto y : assignment_) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  }

  PointSet preimage(const std::vector<char>& codomain_mask) const {
    PointSet out;
    for (std::size_t x = 0; x < domain_.size(); ++x)
      if (codomain_mask[assignment_[x]]) out.push_back(x);
    return out;
  }

  PointSet preimage(const PointSet& t) const { return preimage(codomain_.mask(t)); }

  PointSet image_set(const PointSet& s) const {
    PointSet out;
    for (auto x : s) out.push_back(assignment_[x]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // A subset of the domain is saturated when it is a full union of fibers.
  bool is_saturated(const PointSet& s) const {
    return preimage(image_set(s)) == s;
  }

  // Corestriction to a subset u of the codomain: the induced map
  // preimage(u) -> u between induced subposets.
  SpectralMapData corestrict(const PointSet& u) const {
    auto [sub_codomain, codomain_old] = codomain_.restrict_to(u);
    std::vector<PointIndex> codomain_new(codomain_.size(), 0);
    for (std::size_t i = 0; i < codomain_old.size(); ++i)
      codomain_new[codomain_old[i]] = i;
    auto mask = codomain_.mask(u);
    PointSet dom_points = preimage(mask);
    auto [sub_domain, domain_old] = domain_.restrict_to(dom_points);
    std::vector<PointIndex> assign(domain_old.size());
    for (std::size_t i = 0; i < domain_old.size(); ++i)
      assign[i] = codomain_new[assignment_[domain_old[i]]];
    return SpectralMapData(std::move(sub_domain), std::move(sub_codomain), std::move(assign));
  }

private:
  void validate() const {
    if (assignment_.size() != domain_.size())
      throw InputError("assignment must be total on the domain");
    for (auto y : assignment_)
      if (y >= codomain_.size()) throw InputError("assignment target out of range");
    for (std::size_t x = 0; x < domain_.size(); ++x)
      for (std::size_t y = 0; y < domain_.size(); ++y)
        if (domain_.leq(x, y) && !codomain_.leq(assignment_[x], assignment_[y]))
          throw InputError("assignment is not monotone on pair ('" + domain_.id(x) +
                           "','" + domain_.id(y) + "')");
  }

  FiniteSpectralSpace domain_;
  FiniteSpectralSpace codomain_;
  std::vector<PointIndex> assignment_;
};

}  // namespace ttg
