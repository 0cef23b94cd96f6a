#include "pvitau/sequence_io.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pvitau/errors.hpp"

namespace pvitau {

using nlohmann::json;

std::string sequence_key(Family f, const SeedParams& p, const NormalizationStrategy& s,
                         const GenerateOptions& o) {
  std::string key = "v" + std::to_string(kSchemaVersion) + "_" + to_string(f) + "_r" +
                    to_string(p.r) + "_m" + std::to_string(p.m) + "_s" + to_string(p.s) + "_" +
                    s.name() + "_x" + to_string(o.seed_scale);
  if (o.form != TodaForm::introduction) key += "_" + to_string(o.form);
  if (o.expect_integral) key += "_int";
  return key;
}

std::string sequence_key(const TauSequence& seq) {
  return sequence_key(seq.family, seq.params, seq.strategy, seq.options);
}

std::string write_sequence_document(const TauSequence& seq) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "sequence";
  doc["family"] = to_string(seq.family);
  doc["r"] = to_string(seq.params.r);
  doc["m"] = seq.params.m;
  doc["s"] = to_string(seq.params.s);
  doc["strategy"] = seq.strategy.name();
  doc["seed_scale"] = to_string(seq.options.seed_scale);
  doc["expect_integral"] = seq.options.expect_integral;
  doc["toda_form"] = to_string(seq.options.form);
  doc["N"] = seq.requested_n;
  json polys = json::array();
  for (const auto& p : seq.polys) polys.push_back(p.coeff_strings());
  doc["polys"] = std::move(polys);
  json contents = json::array();
  for (const auto& c : seq.contents) {
    if (c)
      contents.push_back(to_string(*c));
    else
      contents.push_back(nullptr);
  }
  doc["contents"] = std::move(contents);
  json anomalies = json::array();
  for (const auto& a : seq.anomalies)
    anomalies.push_back({{"n", a.n}, {"kind", a.kind}, {"detail", a.detail}});
  doc["anomalies"] = std::move(anomalies);
  return doc.dump(1) + "\n";
}

TauSequence read_sequence_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed sequence document: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion)
      throw InvalidArgument("sequence document has a different schema version");
    TauSequence seq;
    seq.family = parse_family(doc.at("family").get<std::string>());
    seq.params.r = parse_rational(doc.at("r").get<std::string>());
    seq.params.m = doc.at("m").get<int>();
    seq.params.s = parse_rational(doc.at("s").get<std::string>());
    seq.strategy = NormalizationStrategy::parse(doc.at("strategy").get<std::string>());
    seq.options.seed_scale = parse_rational(doc.at("seed_scale").get<std::string>());
    seq.options.expect_integral = doc.at("expect_integral").get<bool>();
    seq.options.form = parse_toda_form(doc.at("toda_form").get<std::string>());
    seq.requested_n = doc.at("N").get<int>();
    for (const auto& p : doc.at("polys"))
      seq.polys.push_back(Poly::from_coeff_strings(p.get<std::vector<std::string>>()));
    for (const auto& c : doc.at("contents")) {
      if (c.is_null())
        seq.contents.emplace_back();
      else
        seq.contents.emplace_back(Integer(c.get<std::string>(), 10));
    }
    for (const auto& a : doc.at("anomalies"))
      seq.anomalies.push_back(
          {a.at("n").get<int>(), a.at("kind").get<std::string>(), a.at("detail").get<std::string>()});
    if (seq.contents.size() != seq.polys.size())
      throw InvalidArgument("sequence document: contents and polys differ in length");
    return seq;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed sequence document: ") + e.what());
  }
}

namespace {

bool terminated_early(const TauSequence& seq) {
  for (const auto& a : seq.anomalies)
    if (a.kind == "non-exact-division") return true;
  return false;
}

bool covers(const TauSequence& seq, int N) { return seq.size() >= N || terminated_early(seq); }

}  // namespace

SequenceCache::SequenceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SequenceCache::file_for(const std::string& key) const {
  std::string name;
  for (char c : key) {
    if (c == '/')
      name += "over";
    else if (c == '-')
      name += "neg";
    else if (c == ':' || c == ',' || c == '=')
      name += '.';
    else
      name += c;
  }
  return dir_ / (name + ".json");
}

std::size_t SequenceCache::memory_entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::shared_ptr<const TauSequence> SequenceCache::get(Family f, const SeedParams& p, int N,
                                                      const NormalizationStrategy& s,
                                                      const GenerateOptions& o) {
  const std::string key = sequence_key(f, p, s, o);
  std::promise<std::shared_ptr<const TauSequence>> promise;
  {
    std::unique_lock<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end() && it->second.first >= N) {
      Entry e = it->second.second;
      lock.unlock();
      auto seq = e.get();
      if (covers(*seq, N)) return seq;
      lock.lock();
    }
    entries_[key] = {N, promise.get_future().share()};
  }
  try {
    auto seq = load_or_generate(f, p, N, s, o, key);
    promise.set_value(seq);
    return seq;
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard<std::mutex> lock(mu_);
    entries_.erase(key);
    throw;
  }
}

std::shared_ptr<const TauSequence> SequenceCache::load_or_generate(
    Family f, const SeedParams& p, int N, const NormalizationStrategy& s,
    const GenerateOptions& o, const std::string& key) {
  std::filesystem::path file;
  if (!dir_.empty()) {
    file = file_for(key);
    std::ifstream in(file);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        auto seq = std::make_shared<TauSequence>(read_sequence_document(buf.str()));
        if (sequence_key(*seq) == key && covers(*seq, N)) return seq;
      } catch (const InvalidArgument&) {
      }
    }
  }
  auto seq = std::make_shared<TauSequence>(generate_sequence(f, p, N, s, o));
  if (!file.empty()) {
    std::filesystem::create_directories(dir_);
    auto tmp = file;
    tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(seq.get()));
    {
      std::ofstream out(tmp, std::ios::binary);
      out << write_sequence_document(*seq);
    }
    std::filesystem::rename(tmp, file);
  }
  return seq;
}

std::filesystem::path cache_dir_from_env(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("PVITAU_CACHE_DIR"); env && *env) return env;
  return fallback;
}

}  // namespace pvitau
