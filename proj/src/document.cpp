#include "bvc/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bvc/errors.hpp"

namespace bvc {

using nlohmann::json;

namespace {

std::vector<VoteRecord> parse_votes(const json& arr, const char* key) {
  if (!arr.is_array()) throw ArgumentError(std::string("\"") + key + "\" must be an array");
  std::vector<VoteRecord> out;
  for (const auto& v : arr) {
    if (!v.is_object() || !v.contains("ranking")) throw ArgumentError(std::string("every entry of \"") + key + "\" needs a ranking");
    VoteRecord r;
    r.ranking = v.at("ranking").get<std::vector<std::string>>();
    if (v.contains("multiplicity")) {
      const auto& m = v.at("multiplicity");
      if (!m.is_number_integer() || m.get<long long>() < 1) throw ArgumentError("multiplicity must be a positive integer");
      r.multiplicity = m.get<std::size_t>();
    }
    out.push_back(std::move(r));
  }
  return out;
}

json votes_json(const std::vector<VoteRecord>& votes) {
  json arr = json::array();
  for (const auto& v : votes) arr.push_back({{"ranking", v.ranking}, {"multiplicity", v.multiplicity}});
  return arr;
}

std::vector<FallbackVote> expand(const ElectionDocument& doc, const std::vector<VoteRecord>& records) {
  std::vector<FallbackVote> out;
  for (const auto& r : records) {
    std::vector<CandidateId> ids;
    for (const auto& name : r.ranking) ids.push_back(doc.id_of(name));
    FallbackVote v(std::move(ids));
    out.insert(out.end(), r.multiplicity, v);
  }
  return out;
}

void check_records(const ElectionDocument& doc, const std::vector<VoteRecord>& records) {
  for (const auto& r : records) {
    if (r.multiplicity == 0) throw ArgumentError("multiplicity must be positive");
    std::set<std::string_view> seen;
    for (const auto& name : r.ranking) {
      doc.id_of(name);
      if (!seen.insert(name).second) throw ArgumentError("ranking lists " + name + " twice");
    }
  }
}

}  // namespace

CandidateId ElectionDocument::id_of(std::string_view name) const {
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i] == name) return static_cast<CandidateId>(i);
  throw ArgumentError("unknown candidate " + std::string(name));
}

void ElectionDocument::validate() const {
  std::set<std::string_view> names;
  for (const auto& c : candidates) {
    if (c.empty()) throw ArgumentError("candidate names must be non-empty");
    if (!names.insert(c).second) throw ArgumentError("candidate " + c + " is listed twice");
  }
  check_records(*this, votes);
  check_records(*this, pool);
  std::set<std::string_view> sp;
  for (const auto& s : spoilers) {
    id_of(s);
    if (!sp.insert(s).second) throw ArgumentError("spoiler " + s + " is listed twice");
  }
}

ElectionDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("candidates") || !j.contains("votes"))
    throw ArgumentError("an election needs \"candidates\" and \"votes\"");
  ElectionDocument doc;
  try {
    doc.candidates = j.at("candidates").get<std::vector<std::string>>();
    doc.votes = parse_votes(j.at("votes"), "votes");
    if (j.contains("spoilers")) doc.spoilers = j.at("spoilers").get<std::vector<std::string>>();
    if (j.contains("pool")) doc.pool = parse_votes(j.at("pool"), "pool");
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad election file: ") + e.what());
  }
  doc.validate();
  return doc;
}

std::string serialize_document(const ElectionDocument& doc) {
  json j;
  j["candidates"] = doc.candidates;
  j["votes"] = votes_json(doc.votes);
  if (!doc.spoilers.empty()) j["spoilers"] = doc.spoilers;
  if (!doc.pool.empty()) j["pool"] = votes_json(doc.pool);
  return j.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path);
  out << text;
}

ElectionDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

void save_document(const ElectionDocument& doc, const std::string& path) {
  write_file(path, serialize_document(doc));
}

std::vector<VoteRecord> load_pool(const std::string& path, const ElectionDocument& doc) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("votes")) throw ArgumentError("a pool file needs \"votes\"");
  if (j.contains("candidates") && j.at("candidates").get<std::vector<std::string>>() != doc.candidates)
    throw ArgumentError("the pool file lists different candidates");
  auto votes = parse_votes(j.at("votes"), "votes");
  check_records(doc, votes);
  return votes;
}

Election to_election(const ElectionDocument& doc) {
  return Election(doc.candidates.size(), expand(doc, doc.votes));
}

std::vector<FallbackVote> pool_votes(const ElectionDocument& doc) { return expand(doc, doc.pool); }

CandidateSet spoiler_set(const ElectionDocument& doc) {
  CandidateSet s(doc.candidates.size());
  for (const auto& name : doc.spoilers) s.insert(doc.id_of(name));
  return s;
}

std::vector<VoteRecord> compress_votes(std::span<const FallbackVote> votes, const std::vector<std::string>& names) {
  std::vector<VoteRecord> out;
  for (std::size_t i = 0; i < votes.size();) {
    std::size_t j = i;
    while (j < votes.size() && votes[j] == votes[i]) ++j;
    VoteRecord r;
    for (auto c : votes[i].approved()) r.ranking.push_back(names.at(c));
    r.multiplicity = j - i;
    out.push_back(std::move(r));
    i = j;
  }
  return out;
}

ElectionDocument make_document(const std::vector<std::string>& names, const Election& e) {
  if (names.size() != e.candidate_count()) throw ArgumentError("one name per candidate is required");
  ElectionDocument doc;
  doc.candidates = names;
  doc.votes = compress_votes(e.votes(), names);
  return doc;
}

}  // namespace bvc
