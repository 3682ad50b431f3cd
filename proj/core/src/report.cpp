#include "pd3/report.hpp"

#include <cstdio>

#include "json_io.hpp"

namespace pd3 {

namespace {

std::string fixed_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out;
  for (const auto& c : r.results) {
    out += c.id + std::string(c.id.size() < 4 ? 4 - c.id.size() : 0, ' ') + " " +
           c.status_string() + "  " + c.title + "  [" + fixed_ms(c.wall_ms) + "]\n";
    for (const auto& d : c.details) out += "      " + d + "\n";
  }
  out += "summary: " + std::to_string(r.results.size()) + " checks, " +
         std::to_string(r.count(Status::Pass)) + " PASS, " +
         std::to_string(r.count(Status::Partial)) + " PARTIAL, " +
         std::to_string(r.count(Status::Fail)) + " FAIL, " + std::to_string(r.count(Status::Skip)) +
         " SKIP (L = " + std::to_string(r.max_length) + ")\n";
  if (r.count(Status::Partial)) {
    out += "note: PARTIAL results certify only the ball of radius L, not the full ring\n";
  }
  out += "corpus " + r.corpus_hash + ", pd3 " + r.version + "\n";
  return out;
}

std::string render_json(const Report& r, bool deterministic) {
  using io::json;
  json results = json::array();
  for (const auto& c : r.results) {
    json j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["status"] = c.status_string();
    if (c.status == Status::Partial) j["radius"] = c.radius;
    j["claim"] = c.claim;
    j["details"] = c.details;
    if (!deterministic) j["wall_time_ms"] = c.wall_ms;
    results.push_back(std::move(j));
  }
  json doc;
  doc["tool"] = "pd3";
  doc["version"] = r.version;
  doc["corpus_hash"] = r.corpus_hash;
  doc["max_length"] = r.max_length;
  doc["summary"] = {{"total", r.results.size()},
                    {"pass", r.count(Status::Pass)},
                    {"partial", r.count(Status::Partial)},
                    {"fail", r.count(Status::Fail)},
                    {"skip", r.count(Status::Skip)}};
  doc["results"] = std::move(results);
  if (!deterministic) doc["wall_time_ms"] = r.wall_ms;
  return doc.dump(2) + "\n";
}

}  // namespace pd3
