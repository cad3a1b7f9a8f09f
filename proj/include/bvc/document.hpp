#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bvc/election.hpp"

// JSON election files. A document names the candidate universe and lists
// votes as runs of identical rankings:
//
//   {"candidates": ["a", "b"],
//    "votes": [{"ranking": ["a", "b"], "multiplicity": 3}],
//    "spoilers": ["b"],                        (optional)
//    "pool": [{"ranking": ["b"], "multiplicity": 1}]}   (optional)
//
// A ranking lists the approved candidates best first.

namespace bvc {

struct VoteRecord {
  std::vector<std::string> ranking;
  std::size_t multiplicity = 1;
  bool operator==(const VoteRecord&) const = default;
};

struct ElectionDocument {
  std::vector<std::string> candidates;
  std::vector<VoteRecord> votes;
  std::vector<std::string> spoilers;
  std::vector<VoteRecord> pool;

  // Throws ArgumentError on repeated names, unknown names or zero multiplicity.
  void validate() const;
  CandidateId id_of(std::string_view name) const;
  bool operator==(const ElectionDocument&) const = default;
};

ElectionDocument parse_document(std::string_view text);
std::string serialize_document(const ElectionDocument& doc);
ElectionDocument load_document(const std::string& path);
void save_document(const ElectionDocument& doc, const std::string& path);

// Pool files hold {"votes": [...]} and optionally the same candidate list.
std::vector<VoteRecord> load_pool(const std::string& path, const ElectionDocument& doc);

// Registered votes, one per unit of multiplicity, in file order.
Election to_election(const ElectionDocument& doc);
std::vector<FallbackVote> pool_votes(const ElectionDocument& doc);
CandidateSet spoiler_set(const ElectionDocument& doc);

// Consecutive identical votes are merged into one record.
std::vector<VoteRecord> compress_votes(std::span<const FallbackVote> votes, const std::vector<std::string>& names);
ElectionDocument make_document(const std::vector<std::string>& names, const Election& e);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bvc
