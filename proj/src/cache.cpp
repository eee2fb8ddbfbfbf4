#include "qfoulkes/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qfoulkes/characters.hpp"
#include "qfoulkes/hall_littlewood.hpp"

// Layout after the header line:
//   chars <n> <size>          followed by <size> rows of <size> integers
//   kf <lambda> <mu> <c0> <c1> ...
//   end <fnv1a-64 of every byte before this line, hex>

namespace qfoulkes {

namespace {

std::uint64_t fnv1a(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

struct Parsed {
    std::vector<std::shared_ptr<CharacterTable::Degree>> degrees;
    std::vector<std::pair<KostkaFoulkesTable::Key, QPoly>> kostka;
};

Parsed parse_body(std::istringstream& in)
{
    Parsed out;
    std::string tag;
    while (in >> tag) {
        if (tag == "chars") {
            auto t = std::make_shared<CharacterTable::Degree>();
            if (!(in >> t->n >> t->size) || t->n < 0 || t->n > 60)
                throw std::runtime_error("bad chars line");
            if (t->size != PartitionIndex::of(t->n).size())
                throw std::runtime_error("chars size does not match the partition count");
            t->values.resize(static_cast<std::size_t>(t->size) * static_cast<std::size_t>(t->size));
            for (auto& v : t->values)
                if (!(in >> v))
                    throw std::runtime_error("truncated character table");
            out.degrees.push_back(std::move(t));
        } else if (tag == "kf") {
            std::string lam, mu, line;
            if (!(in >> lam >> mu))
                throw std::runtime_error("bad kf line");
            std::getline(in, line);
            std::istringstream cs(line);
            std::vector<Rational> coeffs;
            std::string c;
            while (cs >> c)
                coeffs.push_back(Rational(Integer(c)));
            KostkaFoulkesTable::Key key{Partition::parse(lam), Partition::parse(mu)};
            if (key.first.weight() != key.second.weight())
                throw std::runtime_error("kf entry with unequal weights");
            out.kostka.emplace_back(std::move(key), QPoly(std::move(coeffs)));
        } else {
            throw std::runtime_error("unknown record '" + tag + "'");
        }
    }
    return out;
}

}  // namespace

std::filesystem::path default_cache_path()
{
    if (const char* env = std::getenv("QFOULKES_CACHE"); env && *env)
        return env;
    const char* home = std::getenv("HOME");
    return std::filesystem::path(home ? home : ".") / ".cache" / "qfoulkes" / "tables.cache";
}

CacheStatus cache_load(const std::filesystem::path& path)
{
    CacheStatus status;
    std::ifstream file(path, std::ios::binary);
    if (!file)
        return status;
    status.found = true;
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();

    auto discard = [&](const std::string& why) {
        status.warning = "discarding cache " + path.string() + ": " + why;
        return status;
    };

    const auto first_nl = text.find('\n');
    if (first_nl == std::string::npos || text.substr(0, first_nl) != cache_header)
        return discard("unrecognized header");
    const auto end_pos = text.rfind("\nend ");
    if (end_pos == std::string::npos || end_pos < first_nl)
        return discard("missing end marker");
    std::string stored = text.substr(end_pos + 5);
    while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r'))
        stored.pop_back();
    if (stored != hex(fnv1a(std::string_view(text).substr(0, end_pos + 1))))
        return discard("checksum mismatch");

    Parsed parsed;
    try {
        std::istringstream body(text.substr(first_nl + 1, end_pos - first_nl));
        parsed = parse_body(body);
    } catch (const std::exception& e) {
        return discard(e.what());
    }
    for (auto& t : parsed.degrees)
        CharacterTable::global().install(std::move(t));
    for (auto& [key, value] : parsed.kostka)
        KostkaFoulkesTable::global().install(key, std::move(value));
    status.loaded = true;
    status.character_degrees = parsed.degrees.size();
    status.kostka_entries = parsed.kostka.size();
    return status;
}

void cache_store(const std::filesystem::path& path, int max_degree)
{
    std::ostringstream os;
    os << cache_header << '\n';
    for (int n : CharacterTable::global().computed_degrees()) {
        if (n > max_degree)
            continue;
        const auto t = CharacterTable::global().degree(n);
        os << "chars " << t->n << ' ' << t->size << '\n';
        for (int i = 0; i < t->size; ++i) {
            const auto row = t->row(i);
            for (std::size_t j = 0; j < row.size(); ++j)
                os << (j ? " " : "") << row[j];
            os << '\n';
        }
    }
    for (const auto& [key, value] : KostkaFoulkesTable::global().snapshot()) {
        os << "kf " << key.first.str() << ' ' << key.second.str();
        for (const auto& c : value.coeffs()) {
            if (c.get_den() != 1)
                throw std::logic_error("Kostka-Foulkes coefficient is not an integer");
            os << ' ' << c.get_num().get_str();
        }
        os << '\n';
    }
    std::string text = os.str();
    text += "end " + hex(fnv1a(text)) + "\n";

    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec)
            throw std::runtime_error("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << text;
        if (!out.flush())
            throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw std::runtime_error("cannot rename cache into place: " + ec.message());
}

}  // namespace qfoulkes
