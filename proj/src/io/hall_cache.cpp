#include "nilmult/io/hall_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nilmult/errors.hpp"
#include "nilmult/io/json_io.hpp"

namespace nilmult {

namespace {

class DirLock {
 public:
  DirLock(const std::filesystem::path& dir, int mode) {
    fd_ = ::open((dir / "hall.lock").c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error("cannot open cache lock in " + dir.string());
    while (::flock(fd_, mode) != 0)
      if (errno != EINTR) {
        ::close(fd_);
        throw Error("cannot lock cache in " + dir.string());
      }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

HallCache::HallCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path HallCache::file_for(std::size_t n, int w) const {
  return dir_ / ("hall-n" + std::to_string(n) + "-w" + std::to_string(w) + ".json");
}

std::optional<HallBasis> HallCache::load(std::size_t n, int w) const {
  DirLock lock(dir_, LOCK_SH);
  std::ifstream in(file_for(n, w), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    const Json j = Json::parse(ss.str());
    if (j.value("version", "") != kHallOrderVersion) return std::nullopt;
    if (j.at("n").get<std::size_t>() != n || j.at("max_weight").get<int>() != w) return std::nullopt;
    std::vector<BasicCommutator> elements;
    for (const auto& e : j.at("elements")) {
      BasicCommutator c;
      if (e.size() == 1) {
        c.generator = e[0].get<int>();
      } else if (e.size() == 2) {
        c.left = e[0].get<std::size_t>();
        c.right = e[1].get<std::size_t>();
      } else {
        return std::nullopt;
      }
      elements.push_back(std::move(c));
    }
    return HallBasis::from_elements(n, w, std::move(elements));
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

void HallCache::store(const HallBasis& basis) const {
  Json elements = Json::array();
  for (const auto& c : basis.elements()) {
    if (c.is_leaf()) elements.push_back(Json::array({c.generator}));
    else elements.push_back(Json::array({c.left, c.right}));
  }
  const Json j{{"version", kHallOrderVersion},
               {"n", basis.generator_count()},
               {"max_weight", basis.max_weight()},
               {"elements", std::move(elements)}};
  DirLock lock(dir_, LOCK_EX);
  const auto target = file_for(basis.generator_count(), basis.max_weight());
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << j.dump() << '\n';
    if (!out) throw Error("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot replace " + target.string());
  }
}

HallBasis HallCache::get(std::size_t n, int w, std::size_t cap) const {
  if (auto b = load(n, w)) {
    if (b->size() > cap) throw ResourceLimitError("Hall basis exceeds the cap of " + std::to_string(cap));
    return std::move(*b);
  }
  HallBasis b = generate_hall_basis(n, w, cap);
  store(b);
  return b;
}

}  // namespace nilmult
