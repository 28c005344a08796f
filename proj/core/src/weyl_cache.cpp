#include "ideal_lab/weyl_cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <vector>

namespace ideal_lab {

namespace {

constexpr uint32_t kFormatVersion = 1;
constexpr char kMagic[4] = {'I', 'L', 'W', 'C'};

uint64_t fnv1a(const unsigned char* data, size_t n, uint64_t h = 1469598103934665603ull) {
  for (size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

struct Writer {
  std::vector<unsigned char> buf;
  template <class T>
  void raw(const T& v) {
    const auto* p = reinterpret_cast<const unsigned char*>(&v);
    buf.insert(buf.end(), p, p + sizeof(T));
  }
  template <class T>
  void vec(const std::vector<T>& v) {
    const auto* p = reinterpret_cast<const unsigned char*>(v.data());
    buf.insert(buf.end(), p, p + v.size() * sizeof(T));
  }
};

struct Reader {
  const unsigned char* p;
  const unsigned char* end;
  bool ok = true;
  template <class T>
  T raw() {
    T v{};
    if (p + sizeof(T) > end) {
      ok = false;
      return v;
    }
    std::memcpy(&v, p, sizeof(T));
    p += sizeof(T);
    return v;
  }
  template <class T>
  bool vec(std::vector<T>& out, size_t count) {
    if (p + count * sizeof(T) > end) return ok = false;
    out.resize(count);
    std::memcpy(out.data(), p, count * sizeof(T));
    p += count * sizeof(T);
    return true;
  }
};

}  // namespace

// Serialization layout (native byte order; the version bump covers any change):
// magic, version, letter, rank, nroots, size, lengths, images, right_mult,
// inversion words, negative-simple-preimage words, fnv1a checksum of all
// payload bytes after the magic.
struct WeylCacheCodec {
  static std::vector<unsigned char> encode(const WeylGroup& g) {
    Writer w;
    w.buf.insert(w.buf.end(), kMagic, kMagic + 4);
    w.raw(kFormatVersion);
    const RootSystem& rs = g.root_system();
    w.raw(static_cast<int32_t>(static_cast<char>(rs.type().letter)));
    w.raw(static_cast<int32_t>(rs.type().rank));
    w.raw(static_cast<int32_t>(g.nroots_));
    w.raw(static_cast<uint64_t>(g.size()));
    w.vec(g.lengths_);
    w.vec(g.images_);
    w.vec(g.right_);
    auto dump_sets = [&](const std::vector<IndexSet>& sets) {
      for (const IndexSet& s : sets) {
        w.raw(s.word(0));
        w.raw(s.word(1));
      }
    };
    dump_sets(g.inversions_);
    dump_sets(g.neg_simple_pre_);
    w.raw(fnv1a(w.buf.data() + 4, w.buf.size() - 4));
    return w.buf;
  }

  static std::optional<WeylGroup> decode(const std::vector<unsigned char>& buf,
                                         const RootSystem& rs) {
    if (buf.size() < 4 + sizeof(uint64_t) || std::memcmp(buf.data(), kMagic, 4) != 0)
      return std::nullopt;
    const size_t payload_end = buf.size() - sizeof(uint64_t);
    uint64_t stored;
    std::memcpy(&stored, buf.data() + payload_end, sizeof stored);
    if (fnv1a(buf.data() + 4, payload_end - 4) != stored) return std::nullopt;

    Reader r{buf.data() + 4, buf.data() + payload_end};
    if (r.raw<uint32_t>() != kFormatVersion) return std::nullopt;
    if (r.raw<int32_t>() != static_cast<char>(rs.type().letter)) return std::nullopt;
    if (r.raw<int32_t>() != rs.type().rank) return std::nullopt;
    if (r.raw<int32_t>() != rs.num_positive_roots()) return std::nullopt;
    uint64_t size = r.raw<uint64_t>();
    if (!r.ok || size != rs.weyl_order()) return std::nullopt;

    WeylGroup g;
    g.rs_ = &rs;
    g.nroots_ = rs.num_positive_roots();
    g.rank_ = rs.rank();
    if (!r.vec(g.lengths_, size)) return std::nullopt;
    if (!r.vec(g.images_, size * g.nroots_)) return std::nullopt;
    if (!r.vec(g.right_, size * g.rank_)) return std::nullopt;
    auto read_sets = [&](std::vector<IndexSet>& sets) {
      sets.resize(size);
      for (auto& s : sets) {
        s.set_word(0, r.raw<uint64_t>());
        s.set_word(1, r.raw<uint64_t>());
      }
    };
    read_sets(g.inversions_);
    read_sets(g.neg_simple_pre_);
    if (!r.ok || r.p != r.end) return std::nullopt;
    if (g.lengths_.empty() || g.lengths_.front() != 0 ||
        g.lengths_.back() != g.nroots_)
      return std::nullopt;
    g.rebuild_index();
    return g;
  }
};

std::string weyl_cache_path(const RootSystem& rs, const std::string& cache_dir) {
  return cache_dir + "/weyl-" + rs.type().name() + "-v" + std::to_string(kFormatVersion) + ".bin";
}

WeylGroup load_or_enumerate_weyl(const RootSystem& rs, uint64_t cap, const std::string& cache_dir) {
  const std::string path = weyl_cache_path(rs, cache_dir);
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
      if (auto g = WeylCacheCodec::decode(buf, rs)) return std::move(*g);
    }
  }
  WeylGroup g = WeylGroup::enumerate(rs, cap);
  // best-effort write: a read-only cache directory is not an error
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return g;
    auto buf = WeylCacheCodec::encode(g);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return g;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return g;
}

}  // namespace ideal_lab
