#pragma once

#include <span>
#include <string>
#include <vector>

#include "compsil/baselines.hpp"
#include "compsil/composite.hpp"

namespace compsil {

struct CandidateSet {
    std::vector<int> ks;  // sorted, distinct, each >= 2
};

CandidateSet candidate_range(int lo, int hi);

// The experiment protocol's candidate set: {max(2, k_ref-5) .. k_ref+5}.
CandidateSet candidates_around(int k_ref);

enum class RuleKind { Argmax, Lcb };

struct SelectionRule {
    RuleKind kind = RuleKind::Argmax;
    double lcb_c = 1.0;
    std::string name() const { return kind == RuleKind::Argmax ? "argmax" : "lcb"; }
};

struct SelectionReport {
    std::vector<CompositeResult> per_k;                // ascending k
    int subsample = 0;                                 // shared m
    std::vector<std::pair<std::string, int>> selected; // rule name -> k
    std::vector<BaselineValue> baselines;              // optional extras
};

// Evaluates every candidate with a shared subsample size
// m = subsample_size(N, max k) and applies each rule.
SelectionReport sweep(const DataMatrix& data, const CandidateSet& ks, const CompositeConfig& cfg,
                      std::uint64_t master_seed,
                      std::span<const SelectionRule> rules = {});

// argmax: maximize s_mm. lcb(c): maximize s_mm - c * std/sqrt(B).
// Ties go to the smallest k.
int select_k(std::span<const CompositeResult> per_k, const SelectionRule& rule);

// Hoeffding halfwidth sqrt(2 ln(2/delta) / B), or the union-bound version
// sqrt(2 ln(2|K|/delta) / B) when n_candidates > 0.
double hoeffding_halfwidth(int n_trials, double delta, int n_candidates = 0);

// Smallest B with B >= (8/gamma^2) ln(2|K|/delta).
long long min_subsamples_for_margin(double gamma, double delta, int n_candidates);

}  // namespace compsil
