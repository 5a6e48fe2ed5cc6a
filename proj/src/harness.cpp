#include "cusick/harness.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <openssl/evp.h>

#include <json.hpp>

#include "cusick/delta.hpp"
#include "cusick/spectrum.hpp"

namespace cusick {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 6> kCheckNames = {{
    {Check::kFloor, "floor"},
    {Check::kMass, "mass"},
    {Check::kSymmetry, "symmetry"},
    {Check::kCusick, "cusick"},
    {Check::kPair, "pair"},
    {Check::kSufficient, "sufficient"},
}};

}  // namespace

CheckSet CheckSet::all() {
  CheckSet s;
  for (const auto& [c, name] : kCheckNames) s.insert(c);
  return s;
}

CheckSet CheckSet::parse(std::string_view text) {
  if (text == "all") return all();
  CheckSet s;
  for (;;) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto it = std::find_if(kCheckNames.begin(), kCheckNames.end(),
                                 [&](const auto& entry) { return entry.second == item; });
    if (it == kCheckNames.end()) {
      throw std::invalid_argument("unknown check name: " + std::string(item));
    }
    s.insert(it->first);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return s;
}

std::string CheckSet::to_string() const {
  std::string out;
  for (const auto& [c, name] : kCheckNames) {
    if (!contains(c)) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

bool operator==(const SweepRecord& a, const SweepRecord& b) {
  return a.t == b.t && a.lambda == b.lambda && a.t_prime == b.t_prime && a.blocks == b.blocks &&
         a.c_t == b.c_t && a.c_t_prime == b.c_t_prime && a.pair_sum == b.pair_sum &&
         a.pair_sum_ge_15_16 == b.pair_sum_ge_15_16 && a.cusick_holds == b.cusick_holds &&
         a.pair_conjecture_holds == b.pair_conjecture_holds &&
         a.sufficient_holds == b.sufficient_holds &&
         a.sufficient_witness == b.sufficient_witness && a.argmax_set == b.argmax_set &&
         a.support_min == b.support_min && a.support_max == b.support_max;
}

SweepRecord make_record(const BitWord& t, const CheckSet& checks) {
  SweepRecord r;
  r.t = t;
  r.lambda = lambda_of(t);
  r.t_prime = reflect(t);
  r.blocks = count_blocks(t);
  const Spectrum phi_t = phi(t);
  const Spectrum phi_t_prime = phi(r.t_prime);
  const PairSum pair = pair_sum(phi_t, phi_t_prime);
  r.c_t = pair.c_t;
  r.c_t_prime = pair.c_t_prime;
  r.pair_sum = pair.sum;
  r.pair_sum_ge_15_16 = pair.sum >= Dyadic(15).scale_pow2(-4);
  r.cusick_holds = pair.c_t > Dyadic(1).halve();
  r.pair_conjecture_holds = pair.sum > Dyadic(1);
  const SufficientCondition cond = sufficient_condition(phi_t);
  r.sufficient_holds = cond.holds;
  r.sufficient_witness = cond.witness;
  r.argmax_set = argmax_set(phi_t);
  r.support_min = phi_t.min_k();
  r.support_max = phi_t.max_k();
  if (checks.contains(Check::kMass)) {
    r.mass_ok = phi_t.total_mass() == Dyadic(1) && phi_t_prime.total_mass() == Dyadic(1);
  }
  if (checks.contains(Check::kSymmetry)) r.symmetry_ok = phi_t_prime == phi_t.mirrored();
  return r;
}

namespace {

ordered_json dyadic_json(const Dyadic& v) {
  return ordered_json{{"dyadic", v.to_string()}, {"decimal", v.to_decimal(kDecimalDigits)}};
}

Dyadic dyadic_from_json(const ordered_json& j) {
  return Dyadic::parse(j.at("dyadic").get<std::string>());
}

}  // namespace

std::string to_json_line(const SweepRecord& r) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["t"] = r.t.to_string();
  j["lambda"] = r.lambda;
  j["t_prime"] = r.t_prime.to_string();
  j["blocks"] = r.blocks;
  j["c_t"] = dyadic_json(r.c_t);
  j["c_t_prime"] = dyadic_json(r.c_t_prime);
  j["pair_sum"] = dyadic_json(r.pair_sum);
  j["pair_sum_ge_15_16"] = r.pair_sum_ge_15_16;
  j["cusick_holds"] = r.cusick_holds;
  j["pair_conjecture_holds"] = r.pair_conjecture_holds;
  j["sufficient_holds"] = r.sufficient_holds;
  j["sufficient_witness"] =
      r.sufficient_witness ? ordered_json(*r.sufficient_witness) : ordered_json(nullptr);
  j["argmax_set"] = r.argmax_set;
  j["phi_support"] = {r.support_min, r.support_max};
  return j.dump();
}

SweepRecord parse_record(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("record is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported record schema");
    }
    SweepRecord r;
    r.t = BitWord::parse(j.at("t").get<std::string>());
    r.lambda = j.at("lambda").get<std::int64_t>();
    r.t_prime = BitWord::parse(j.at("t_prime").get<std::string>());
    r.blocks = j.at("blocks").get<std::size_t>();
    r.c_t = dyadic_from_json(j.at("c_t"));
    r.c_t_prime = dyadic_from_json(j.at("c_t_prime"));
    r.pair_sum = dyadic_from_json(j.at("pair_sum"));
    r.pair_sum_ge_15_16 = j.at("pair_sum_ge_15_16").get<bool>();
    r.cusick_holds = j.at("cusick_holds").get<bool>();
    r.pair_conjecture_holds = j.at("pair_conjecture_holds").get<bool>();
    r.sufficient_holds = j.at("sufficient_holds").get<bool>();
    if (!j.at("sufficient_witness").is_null()) {
      r.sufficient_witness = j.at("sufficient_witness").get<std::int64_t>();
    }
    r.argmax_set = j.at("argmax_set").get<std::vector<std::int64_t>>();
    const auto support = j.at("phi_support").get<std::vector<std::int64_t>>();
    if (support.size() != 2) throw std::invalid_argument("phi_support must have two entries");
    r.support_min = support[0];
    r.support_max = support[1];
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("record does not match schema: ") + e.what());
  }
}

std::string csv_header() {
  return "t,lambda,t_prime,blocks,c_t,c_t_prime,pair_sum,pair_sum_ge_15_16,cusick_holds,"
         "pair_conjecture_holds,sufficient_holds";
}

std::string to_csv_line(const SweepRecord& r) {
  std::ostringstream os;
  const auto flag = [](bool b) { return b ? "1" : "0"; };
  os << r.t << ',' << r.lambda << ',' << r.t_prime << ',' << r.blocks << ','
     << r.c_t.to_decimal(kDecimalDigits) << ',' << r.c_t_prime.to_decimal(kDecimalDigits) << ','
     << r.pair_sum.to_decimal(kDecimalDigits) << ',' << flag(r.pair_sum_ge_15_16) << ','
     << flag(r.cusick_holds) << ',' << flag(r.pair_conjecture_holds) << ','
     << flag(r.sufficient_holds);
  return os.str();
}

void ViolationTally::note(const BitWord& t) {
  if (count++ == 0) first = t;
}

void ViolationTally::merge(const ViolationTally& later) {
  if (count == 0) first = later.first;
  count += later.count;
}

void SweepSummary::add(const SweepRecord& r, const CheckSet& checks) {
  ++records;
  if (!min_pair_sum || r.pair_sum < *min_pair_sum) {
    min_pair_sum = r.pair_sum;
    min_pair_sum_t = r.t;
  }
  if (checks.contains(Check::kFloor) && !r.pair_sum_ge_15_16) floor.note(r.t);
  if (checks.contains(Check::kMass) && !r.mass_ok) mass.note(r.t);
  if (checks.contains(Check::kSymmetry) && !r.symmetry_ok) symmetry.note(r.t);
  if (checks.contains(Check::kCusick) && !r.cusick_holds) cusick.note(r.t);
  if (checks.contains(Check::kPair) && !r.pair_conjecture_holds) pair.note(r.t);
  if (checks.contains(Check::kSufficient) && !r.sufficient_holds) sufficient.note(r.t);
}

void SweepSummary::merge(const SweepSummary& later) {
  records += later.records;
  if (later.min_pair_sum && (!min_pair_sum || *later.min_pair_sum < *min_pair_sum)) {
    min_pair_sum = later.min_pair_sum;
    min_pair_sum_t = later.min_pair_sum_t;
  }
  floor.merge(later.floor);
  mass.merge(later.mass);
  symmetry.merge(later.symmetry);
  cusick.merge(later.cusick);
  pair.merge(later.pair);
  sufficient.merge(later.sufficient);
}

namespace {

ordered_json tally_json(const ViolationTally& v) {
  return ordered_json{{"count", v.count},
                      {"first_t", v.first ? ordered_json(v.first->to_string()) : ordered_json()}};
}

ViolationTally tally_from_json(const ordered_json& j) {
  ViolationTally v;
  v.count = j.at("count").get<std::uint64_t>();
  if (!j.at("first_t").is_null()) v.first = BitWord::parse(j.at("first_t").get<std::string>());
  return v;
}

}  // namespace

std::string SweepSummary::to_json() const {
  ordered_json j;
  j["records"] = records;
  j["complete"] = complete;
  j["min_pair_sum"] = min_pair_sum ? dyadic_json(*min_pair_sum) : ordered_json();
  j["min_pair_sum_t"] = min_pair_sum_t ? ordered_json(min_pair_sum_t->to_string()) : ordered_json();
  j["hard_failures"] = hard_failures();
  j["hard"] = {{"floor", tally_json(floor)},
               {"mass", tally_json(mass)},
               {"symmetry", tally_json(symmetry)}};
  j["flagged"] = {{"cusick", tally_json(cusick)},
                  {"pair", tally_json(pair)},
                  {"sufficient", tally_json(sufficient)}};
  return j.dump();
}

SweepSummary SweepSummary::from_json(std::string_view text) {
  const ordered_json j = ordered_json::parse(text);
  SweepSummary s;
  s.records = j.at("records").get<std::uint64_t>();
  s.complete = j.at("complete").get<bool>();
  if (!j.at("min_pair_sum").is_null()) {
    s.min_pair_sum = dyadic_from_json(j.at("min_pair_sum"));
    s.min_pair_sum_t = BitWord::parse(j.at("min_pair_sum_t").get<std::string>());
  }
  s.floor = tally_from_json(j.at("hard").at("floor"));
  s.mass = tally_from_json(j.at("hard").at("mass"));
  s.symmetry = tally_from_json(j.at("hard").at("symmetry"));
  s.cusick = tally_from_json(j.at("flagged").at("cusick"));
  s.pair = tally_from_json(j.at("flagged").at("pair"));
  s.sufficient = tally_from_json(j.at("flagged").at("sufficient"));
  return s;
}

unsigned effective_jobs(unsigned requested) {
  unsigned jobs = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("CUSICK_MAX_JOBS"); cap != nullptr && *cap != '\0') {
    const long limit = std::strtol(cap, nullptr, 10);
    if (limit >= 1) jobs = std::min(jobs, static_cast<unsigned>(limit));
  }
  return jobs;
}

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("SHA-256 initialisation failed");
    }
  }

  void update(std::string_view bytes) {
    if (EVP_DigestUpdate(ctx_.get(), bytes.data(), bytes.size()) != 1) {
      throw std::runtime_error("SHA-256 update failed");
    }
  }

  /// Digest of everything so far; the running state is left untouched.
  [[nodiscard]] std::string hex() const {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> copy(EVP_MD_CTX_new(),
                                                                 &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!copy || EVP_MD_CTX_copy_ex(copy.get(), ctx_.get()) != 1 ||
        EVP_DigestFinal_ex(copy.get(), digest, &len) != 1) {
      throw std::runtime_error("SHA-256 finalisation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += kHex[digest[i] >> 4];
      out += kHex[digest[i] & 15];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

constexpr std::string_view kCheckpointMagic = "cusick-sweep-checkpoint 1";

struct Checkpoint {
  std::string from;
  std::string to;
  std::string checks;
  std::uint64_t block_size = 0;
  std::uint64_t next_block = 0;
  std::string last_t;
  std::uint64_t bytes = 0;
  std::string sha256;
  SweepSummary summary;

  [[nodiscard]] std::string serialize() const {
    std::ostringstream os;
    os << kCheckpointMagic << '\n'
       << "from " << from << '\n'
       << "to " << to << '\n'
       << "checks " << checks << '\n'
       << "block_size " << block_size << '\n'
       << "next_block " << next_block << '\n'
       << "last_t " << last_t << '\n'
       << "bytes " << bytes << '\n'
       << "sha256 " << sha256 << '\n'
       << "summary " << summary.to_json() << '\n';
    return os.str();
  }

  static Checkpoint load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != kCheckpointMagic) {
      throw std::runtime_error("corrupt checkpoint: bad header in " + path.string());
    }
    std::map<std::string, std::string> fields;
    while (std::getline(in, line)) {
      const auto space = line.find(' ');
      if (space == std::string::npos) throw std::runtime_error("corrupt checkpoint: " + line);
      fields[line.substr(0, space)] = line.substr(space + 1);
    }
    const auto get = [&](const std::string& key) -> const std::string& {
      const auto it = fields.find(key);
      if (it == fields.end()) throw std::runtime_error("corrupt checkpoint: missing " + key);
      return it->second;
    };
    Checkpoint c;
    try {
      c.from = get("from");
      c.to = get("to");
      c.checks = get("checks");
      c.block_size = std::stoull(get("block_size"));
      c.next_block = std::stoull(get("next_block"));
      c.last_t = get("last_t");
      c.bytes = std::stoull(get("bytes"));
      c.sha256 = get("sha256");
      c.summary = SweepSummary::from_json(get("summary"));
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("corrupt checkpoint: ") + e.what());
    }
    return c;
  }

  /// Write to a sibling temp file, then rename over the target.
  void store(const std::filesystem::path& path) const {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
      out << serialize();
      out.flush();
      if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }
};

struct BlockResult {
  std::string text;
  SweepSummary summary;
};

BlockResult run_block(const BitWord& first, std::uint64_t count, const CheckSet& checks) {
  BlockResult out;
  for (std::uint64_t i = 0; i < count; ++i) {
    const SweepRecord r = make_record(first.plus(i), checks);
    out.text += to_json_line(r);
    out.text += '\n';
    out.summary.add(r, checks);
  }
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes);
  return h.hex();
}

SweepSummary sweep(const SweepOptions& options) {
  if (options.from.is_zero()) throw std::invalid_argument("sweep range must start at t >= 1");
  if (options.to < options.from) throw std::invalid_argument("sweep needs from <= to");
  if (options.block_size == 0) throw std::invalid_argument("block size must be positive");
  const mpz_class span = options.to.value() - options.from.value() + 1;
  if (!span.fits_ulong_p()) throw std::invalid_argument("sweep range too large");
  const std::uint64_t total = span.get_ui();
  const std::uint64_t block_count = (total + options.block_size - 1) / options.block_size;

  Checkpoint state;
  state.from = options.from.to_string();
  state.to = options.to.to_string();
  state.checks = options.checks.to_string();
  state.block_size = options.block_size;

  Sha256 digest;
  const bool resuming = options.checkpoint && std::filesystem::exists(*options.checkpoint);
  if (resuming) {
    const Checkpoint saved = Checkpoint::load(*options.checkpoint);
    if (saved.from != state.from || saved.to != state.to || saved.checks != state.checks ||
        saved.block_size != state.block_size) {
      throw std::runtime_error("checkpoint belongs to a different sweep");
    }
    std::ifstream in(options.out, std::ios::binary);
    if (!in) throw std::runtime_error("cannot reopen output " + options.out.string());
    std::string prefix(saved.bytes, '\0');
    if (!in.read(prefix.data(), static_cast<std::streamsize>(saved.bytes))) {
      throw std::runtime_error("corrupt checkpoint: output shorter than recorded");
    }
    digest.update(prefix);
    if (digest.hex() != saved.sha256) {
      throw std::runtime_error("corrupt checkpoint: digest mismatch on " + options.out.string());
    }
    in.close();
    // drop whatever a killed run wrote after its last checkpoint
    std::filesystem::resize_file(options.out, saved.bytes);
    state = saved;
  }

  std::ofstream out(options.out, std::ios::binary | (resuming ? std::ios::app : std::ios::trunc));
  if (!out) throw std::runtime_error("cannot open output " + options.out.string());

  const std::uint64_t start_block = state.next_block;
  std::uint64_t stop_block = block_count;
  if (options.stop_after_blocks) {
    stop_block = std::min(block_count, start_block + *options.stop_after_blocks);
  }

  const unsigned jobs = std::max(1u, effective_jobs(options.jobs));
  const std::uint64_t window = 2 * static_cast<std::uint64_t>(jobs);
  std::mutex mu;
  std::condition_variable ready;
  std::condition_variable room;
  std::map<std::uint64_t, BlockResult> done;
  std::uint64_t next_to_write = start_block;
  std::atomic<std::uint64_t> next_to_claim = start_block;
  std::exception_ptr failure;
  bool abort = false;

  const auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next_to_claim.fetch_add(1);
      if (b >= stop_block) return;
      {
        std::unique_lock lock(mu);
        room.wait(lock, [&] { return abort || b < next_to_write + window; });
        if (abort) return;
      }
      BlockResult result;
      try {
        const std::uint64_t count = std::min(options.block_size, total - b * options.block_size);
        result = run_block(options.from.plus(b * options.block_size), count, options.checks);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        abort = true;
        ready.notify_all();
        room.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      done.emplace(b, std::move(result));
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);

  const auto stop_pool = [&] {
    {
      std::lock_guard lock(mu);
      abort = true;
    }
    room.notify_all();
    for (auto& th : pool) th.join();
  };

  try {
    while (next_to_write < stop_block) {
      BlockResult result;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return abort || done.count(next_to_write) != 0; });
        if (failure) std::rethrow_exception(failure);
        auto node = done.extract(next_to_write);
        result = std::move(node.mapped());
      }
      out << result.text;
      out.flush();
      if (!out) throw std::runtime_error("failed writing " + options.out.string());
      digest.update(result.text);
      state.bytes += result.text.size();
      state.summary.merge(result.summary);
      {
        std::lock_guard lock(mu);
        ++next_to_write;
      }
      room.notify_all();
      state.next_block = next_to_write;
      const std::uint64_t last_index =
          std::min(total, state.next_block * options.block_size) - 1;
      state.last_t = options.from.plus(last_index).to_string();
      state.summary.complete = state.next_block == block_count;
      state.sha256 = digest.hex();
      if (options.checkpoint) state.store(*options.checkpoint);
    }
  } catch (...) {
    stop_pool();
    throw;
  }
  stop_pool();
  state.summary.complete = state.next_block == block_count;
  return state.summary;
}

}  // namespace cusick
