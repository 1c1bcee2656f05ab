#pragma once

#include <string_view>
#include <vector>

namespace morfo::golden {

struct Row {
  std::string_view word;
  std::string_view lossless;     // default rendering
  std::string_view paper_exact;  // as printed, per~ shown as pe~
};

// "makan" / "jalan" variations. Two printed rows carry typos and are stored corrected:
// "menjalankan -> me~ jalan ~" (suffix lost) and "pejalan -> p~ jalan".
inline const std::vector<Row> kWordVariations = {
    {"makan-makan", "prl~ makan", "prl~ makan"},
    {"memakan", "me~ makan", "me~ makan"},
    {"memakani", "me~ makan ~i", "me~ makan ~i"},
    {"memakankan", "me~ makan ~kan", "me~ makan ~kan"},
    {"makanan", "makan ~an", "makan ~an"},
    {"dimakan", "di~ makan", "di~ makan"},
    {"pemakan", "pe~ makan", "pe~ makan"},
    {"termakan", "ter~ makan", "ter~ makan"},
    {"sepemakan", "se~ pe~ makan", "se~ pe~ makan"},
    {"makan-makanan", "prl~ makan ~an", "prl~ makan ~an"},
    {"berjalan-jalan", "ber~ prl~ jalan", "ber~ prl~ jalan"},
    {"berjalan", "ber~ jalan", "ber~ jalan"},
    {"menjalani", "me~ jalan ~i", "me~ jalan ~i"},
    {"menjalankan", "me~ jalan ~kan", "me~ jalan ~kan"},
    {"jalanan", "jalan ~an", "jalan ~an"},
    {"pejalan", "pe~ jalan", "pe~ jalan"},
    {"perjalanan", "per~ jalan ~an", "pe~ jalan ~an"},
    {"sejalan", "se~ jalan", "se~ jalan"},
};

// ber~ / ter~ rules.
inline const std::vector<Row> kBerTer = {
    {"berencana", "ber~ rencana", "ber~ rencana"},
    {"berhasil", "ber~ hasil", "ber~ hasil"},
    {"bebercak", "ber~ bercak", "ber~ bercak"},
    {"belajar", "ber~ ajar", "ber~ ajar"},
    {"beterbangan", "ber~ terbang ~an", "ber~ terbang ~an"},
    {"terendah", "ter~ rendah", "ter~ rendah"},
    {"terjerumus", "ter~ jerumus", "ter~ jerumus"},
    {"tersisa", "ter~ sisa", "ter~ sisa"},
};

// me~ rules.
inline const std::vector<Row> kMe = {
    {"melebihi", "me~ lebih ~i", "me~ lebih ~i"},
    {"meraih", "me~ raih", "me~ raih"},
    {"mewujudkan", "me~ wujud ~kan", "me~ wujud ~kan"},
    {"meyakini", "me~ yakin ~i", "me~ yakin ~i"},
    {"membedakan", "me~ beda ~kan", "me~ beda ~kan"},
    {"memfasilitasi", "me~ fasilitas ~i", "me~ fasilitas ~i"},
    {"memviralkan", "me~ viral ~kan", "me~ viral ~kan"},
    {"mempertahankan", "me~ per~ tahan ~kan", "me~ pe~ tahan ~kan"},
    {"memukul", "me~ pukul", "me~ pukul"},
    {"memprakarsai", "me~ prakarsa ~i", "me~ prakarsa ~i"},
    {"memerkosa", "me~ perkosa", "me~ perkosa"},
    {"mencoba", "me~ coba", "me~ coba"},
    {"mendapat", "me~ dapat", "me~ dapat"},
    {"menjadi", "me~ jadi", "me~ jadi"},
    {"menzalimi", "me~ zalim ~i", "me~ zalim ~i"},
    {"menilai", "me~ nilai", "me~ nilai"},
    {"menulis", "me~ tulis", "me~ tulis"},
    {"menggunakan", "me~ guna ~kan", "me~ guna ~kan"},
    {"mengharapkan", "me~ harap ~kan", "me~ harap ~kan"},
    {"mengqisash", "me~ qisash", "me~ qisash"},
    {"mengkalkulasi", "me~ kalkulasi", "me~ kalkulasi"},
    {"menganggap", "me~ anggap", "me~ anggap"},
    {"mengasihi", "me~ kasih ~i", "me~ kasih ~i"},
    {"menyelamatkan", "me~ selamat ~kan", "me~ selamat ~kan"},
    {"memikirkan", "me~ pikir ~kan", "me~ pikir ~kan"},
};

// pe~ rules.
inline const std::vector<Row> kPe = {
    {"pewakaf", "pe~ wakaf", "pe~ wakaf"},
    {"perairan", "per~ air ~an", "pe~ air ~an"},
    {"peraih", "pe~ raih", "pe~ raih"},
    {"perbuatannya", "per~ buat ~an ~nya", "pe~ buat ~an ~nya"},
    {"pembunuhan", "pe~ bunuh ~an", "pe~ bunuh ~an"},
    {"pemfaktoran", "pe~ faktor ~an", "pe~ faktor ~an"},
    {"pencapaian", "pe~ capai ~an", "pe~ capai ~an"},
    {"pendidik", "pe~ didik", "pe~ didik"},
    {"penasehat", "pe~ nasehat", "pe~ nasehat"},
    {"penabur", "pe~ tabur", "pe~ tabur"},
    {"penggelapan", "pe~ gelap ~an", "pe~ gelap ~an"},
    {"penghargaan", "pe~ harga ~an", "pe~ harga ~an"},
    {"pengkultusan", "pe~ kultus ~an", "pe~ kultus ~an"},
    {"pengakuan", "pe~ aku ~an", "pe~ aku ~an"},
    {"penyesalan", "pe~ sesal ~an", "pe~ sesal ~an"},
    {"pelumas", "pe~ lumas", "pe~ lumas"},
    {"pelajar", "pe~ ajar", "pe~ ajar"},
};

inline constexpr std::string_view kSentenceIn =
    "Benarkah semua korban gempa Aceh sudah terjamin kebutuhan pokoknya?";
inline constexpr std::string_view kSentenceOut =
    "benar ~kah semua korban gempa aceh sudah ter~ jamin ke~ butuh ~an pokok ~nya ?";

}  // namespace morfo::golden
