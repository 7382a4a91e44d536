#include "torsor/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "torsor/parse.hpp"

namespace torsor {

namespace fs = std::filesystem;

CompletionCache::CompletionCache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) fs::create_directories(dir_);
}

std::string CompletionCache::default_dir() {
  const char* env = std::getenv("TORSOR_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

std::string CompletionCache::hash_key(const Presentation& pres, int degree_bound) {
  // FNV-1a over the stable serialization
  std::string payload = "engine " + std::to_string(kEngineVersion) + "\nbound " +
                        std::to_string(degree_bound) + "\n" + pres.serialize();
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return std::string(buf);
}

std::shared_ptr<const CompletedSystem> CompletionCache::load(const PresentationPtr& pres,
                                                             int degree_bound) const {
  if (dir_.empty()) return nullptr;
  fs::path file = fs::path(dir_) / (hash_key(*pres, degree_bound) + ".rules");
  std::ifstream in(file);
  if (!in) return nullptr;
  std::ostringstream all;
  all << in.rdbuf();
  std::istringstream stream(all.str());

  std::string line;
  auto fail = [&]() -> std::shared_ptr<const CompletedSystem> { return nullptr; };
  if (!std::getline(stream, line) || line != "torsor-cache " + std::to_string(kEngineVersion))
    return fail();
  // exact presentation match required
  std::string expected = pres->serialize();
  std::string presentation_block;
  while (std::getline(stream, line) && line != "::rules::")
    presentation_block += line + "\n";
  std::ostringstream want;
  want << "bound " << degree_bound << "\n" << expected;
  if (presentation_block != want.str()) return fail();

  SystemStatus status = SystemStatus::confluent_up_to_bound;
  int added = 0;
  std::vector<Rule> rules;
  try {
    while (std::getline(stream, line)) {
      if (line.empty()) continue;
      if (line.rfind("status ", 0) == 0) {
        status = line == "status saturated" ? SystemStatus::saturated_at_bound
                                            : SystemStatus::confluent_up_to_bound;
      } else if (line.rfind("added ", 0) == 0) {
        added = std::stoi(line.substr(6));
      } else if (line.rfind("rule ", 0) == 0) {
        auto arrow = line.find(" -> ");
        if (arrow == std::string::npos) return fail();
        std::string lhs_text = line.substr(5, arrow - 5);
        std::string rhs_text = line.substr(arrow + 4);
        Element lhs = parse_element(lhs_text, pres);
        Element rhs = parse_element(rhs_text, pres);
        if (lhs.term_count() != 1) return fail();
        rules.push_back(Rule{lhs.leading_word(), std::move(rhs)});
      } else {
        return fail();
      }
    }
  } catch (const ParseError&) {
    return fail();
  }
  return std::make_shared<CompletedSystem>(pres, std::move(rules), degree_bound, status, added);
}

void CompletionCache::store(const CompletedSystem& sys) const {
  if (dir_.empty()) return;
  fs::path file = fs::path(dir_) /
                  (hash_key(*sys.presentation(), sys.degree_bound()) + ".rules");
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << "torsor-cache " << kEngineVersion << "\n";
    out << "bound " << sys.degree_bound() << "\n";
    out << sys.presentation()->serialize();
    out << "::rules::\n";
    out << "status "
        << (sys.status() == SystemStatus::confluent_up_to_bound ? "confluent" : "saturated")
        << "\n";
    out << "added " << sys.rules_added() << "\n";
    for (const Rule& r : sys.rules()) {
      out << "rule " << sys.presentation()->word_str(r.lhs) << " -> " << r.rhs.str() << "\n";
    }
  }
  fs::rename(tmp, file);
}

}  // namespace torsor
