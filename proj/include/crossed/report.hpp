#pragma once

// Structured validation results: one entry per axiom with instance counts and
// located witnesses for failing instances.

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crossed/matrix.hpp"
#include "crossed/parallel.hpp"

namespace crossed {

struct Failure {
  std::string where;    // grades and basis indices of the instance
  std::string witness;  // first differing coordinate with both values
};

/// category: "axiom" for defining conditions, "derived" for consequences
/// that must hold whenever the axioms do (a failure there with passing
/// axioms is an internal inconsistency), "inferred" for identities checked
/// as natural candidates rather than stated ones.
struct AxiomResult {
  std::string id;
  std::string category = "axiom";
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // capped; failure_count is exact
  bool skipped = false;
  std::string note;

  bool passed() const { return failure_count == 0; }
};

struct ValidationReport {
  std::string subject;
  std::vector<AxiomResult> axioms;

  bool passed() const {
    for (const auto& a : axioms)
      if (!a.passed()) return false;
    return true;
  }
  bool axioms_passed() const {
    for (const auto& a : axioms)
      if (a.category == "axiom" && !a.passed()) return false;
    return true;
  }
  const AxiomResult* find(const std::string& id) const {
    for (const auto& a : axioms)
      if (a.id == id) return &a;
    return nullptr;
  }
  std::vector<std::string> failing_ids() const {
    std::vector<std::string> r;
    for (const auto& a : axioms)
      if (!a.passed()) r.push_back(a.id);
    return r;
  }
  void append(const ValidationReport& other, const std::string& prefix = "") {
    for (auto a : other.axioms) {
      a.id = prefix + a.id;
      axioms.push_back(std::move(a));
    }
  }
  std::size_t total_instances() const {
    std::size_t n = 0;
    for (const auto& a : axioms) n += a.instances;
    return n;
  }
};

inline constexpr std::size_t kMaxWitnesses = 8;

/// Compares two coordinate vectors; on mismatch describes the first
/// differing coordinate.
template <class T>
std::optional<Failure> compare(const std::string& where, const Vec<T>& lhs, const Vec<T>& rhs) {
  if (lhs.size() != rhs.size())
    return Failure{where, "length " + std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size())};
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (!(lhs[k] == rhs[k]))
      return Failure{where, "coordinate " + std::to_string(k) + ": lhs=" + lhs[k].to_string() + " rhs=" + rhs[k].to_string()};
  return std::nullopt;
}

template <class T>
std::optional<Failure> compare(const std::string& where, const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{where, "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string()};
}

/// Runs n independent instances (possibly concurrently) and merges the
/// failures in instance order.
template <class F>
AxiomResult run_axiom(std::string id, std::string category, std::size_t n, F&& instance) {
  AxiomResult r;
  r.id = std::move(id);
  r.category = std::move(category);
  r.instances = n;
  std::vector<std::optional<Failure>> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = instance(i); });
  for (auto& f : out) {
    if (!f) continue;
    ++r.failure_count;
    if (r.failures.size() < kMaxWitnesses) r.failures.push_back(std::move(*f));
  }
  return r;
}

inline AxiomResult skipped_axiom(std::string id, std::string category, std::string note) {
  AxiomResult r;
  r.id = std::move(id);
  r.category = std::move(category);
  r.skipped = true;
  r.note = std::move(note);
  return r;
}

inline nlohmann::ordered_json to_json(const ValidationReport& rep) {
  nlohmann::ordered_json j;
  j["subject"] = rep.subject;
  j["passed"] = rep.passed();
  j["instances"] = rep.total_instances();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& a : rep.axioms) {
    nlohmann::ordered_json e;
    e["id"] = a.id;
    e["category"] = a.category;
    e["instances"] = a.instances;
    e["passed"] = a.passed();
    if (a.skipped) e["skipped"] = true;
    if (!a.note.empty()) e["note"] = a.note;
    if (a.failure_count) {
      e["failure_count"] = a.failure_count;
      auto fs = nlohmann::ordered_json::array();
      for (const auto& f : a.failures) fs.push_back({{"where", f.where}, {"witness", f.witness}});
      e["failures"] = fs;
    }
    arr.push_back(e);
  }
  j["axioms"] = arr;
  return j;
}

inline std::string to_text(const ValidationReport& rep) {
  std::ostringstream os;
  os << rep.subject << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& a : rep.axioms) {
    os << "  [" << (a.skipped ? "SKIP" : a.passed() ? "ok" : "FAIL") << "] " << a.id << " (" << a.category << ", "
       << a.instances << " instances)";
    if (!a.note.empty()) os << " " << a.note;
    os << "\n";
    for (const auto& f : a.failures) os << "      at " << f.where << ": " << f.witness << "\n";
    if (a.failure_count > a.failures.size()) os << "      ... " << a.failure_count - a.failures.size() << " more\n";
  }
  return os.str();
}

}  // namespace crossed
