#include "subdiv/catalog.hpp"

#include <initializer_list>
#include <map>

namespace subdiv {

namespace {

std::vector<Rational> parse_all(std::initializer_list<const char*> tokens) {
    std::vector<Rational> out;
    out.reserve(tokens.size());
    for (const char* t : tokens) out.push_back(Rational::from_string(t));
    return out;
}

// Builds the full dual binary mask from the per-rule coefficient list
// (ascending index). The two rules are mirror images, so the full mask
// interleaves the list with its reversal; anchored at index 0.
SubdivisionScheme dual_binary(std::string name, std::string provenance,
                              std::initializer_list<const char*> per_rule) {
    std::vector<Rational> b = parse_all(per_rule);
    const int two_n = static_cast<int>(b.size());
    const int n = two_n / 2;
    std::vector<Rational> full(static_cast<std::size_t>(2 * two_n));
    for (int u = -n; u <= n - 1; ++u) {
        full[static_cast<std::size_t>(2 * u + 2 * n)] = b[static_cast<std::size_t>(u + n)];
        full[static_cast<std::size_t>(2 * u + 1 + 2 * n)] = b[static_cast<std::size_t>(n - 1 - u)];
    }
    return {Mask(2, 0, std::move(full)), std::move(name), std::move(provenance)};
}

// Assembles a quaternary mask from its two distinct rule rows. Rows for the
// remaining two phases are the mirrors. odd_half selects the odd-n layout
// (wide rows on phases -2/-1); m fixes the row supports.
SubdivisionScheme quaternary(std::string name, std::string provenance, bool odd_half, int m,
                             std::initializer_list<const char*> row_a,
                             std::initializer_list<const char*> row_b) {
    std::vector<Rational> a = parse_all(row_a);
    std::vector<Rational> b = parse_all(row_b);
    int a_lo = odd_half ? -3 * m - 1 : -3 * m + 1;
    int b_lo = odd_half ? -3 * m : -3 * m + 1;
    std::map<int, Rational> acc;
    for (std::size_t k = 0; k < a.size(); ++k) {
        int u = a_lo + static_cast<int>(k);
        acc[-2 - 4 * u] = a[k];
        acc[-1 - 4 * u] = a[a.size() - 1 - k];
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        int u = b_lo + static_cast<int>(k);
        acc[-4 * u] = b[k];
        acc[1 - 4 * u] = b[b.size() - 1 - k];
    }
    int lo = acc.begin()->first, hi = acc.rbegin()->first;
    std::vector<Rational> full(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [idx, v] : acc) full[static_cast<std::size_t>(idx - lo)] = std::move(v);
    // Anchor at 0, matching the conversion output for a binary anchored at 0.
    return {Mask(4, 0, std::move(full)), std::move(name), std::move(provenance)};
}

std::map<std::string, SubdivisionScheme> build_catalog() {
    std::map<std::string, SubdivisionScheme> cat;
    auto put = [&cat](SubdivisionScheme s) { cat.emplace(s.name, std::move(s)); };

    put(dual_binary("binary-chaikin-2pt", "Chaikin (1974) corner cutting",
                    {"1/4", "3/4"}));
    put(dual_binary("binary-siddiqi-4pt", "Siddiqi-Ahmad even-point family, 4-point",
                    {"1/384", "121/384", "235/384", "9/128"}));
    put(dual_binary("binary-siddiqi-6pt", "Siddiqi-Ahmad even-point family, 6-point",
                    {"1/122880", "3119/122880", "6719/20480", "31927/61440",
                     "15349/122880", "81/40960"}));
    put(dual_binary("binary-siddiqi-8pt", "Siddiqi-Ahmad even-point family, 8-point",
                    {"1/82575360", "26039/27525120", "1385999/27525120", "26672209/82575360",
                     "4210971/9175040", "1440007/9175040", "806047/82575360", "243/9175040"}));
    put(dual_binary("binary-binomial-10pt", "binomial 10-point scheme (signed mask)",
                    {"12155/33554432", "-138567/33554432", "188955/8388608", "-692835/8388608",
                     "4849845/16777216", "14549535/16777216", "-969969/8388608",
                     "230945/8388608", "-159885/33554432", "13585/33554432"}));
    put(dual_binary("binary-siddiqi-10pt", "Siddiqi-Ahmad even-point family, 10-point",
                    {"1/95126814720", "390623/19025362944", "13138903/3397386240",
                     "1704546247/23781703680", "14871214991/47563407360",
                     "19761725357/47563407360", "833871641/4756340736",
                     "488824339/23781703680", "40156777/95126814720", "243/1174405120"}));
    put(dual_binary("binary-siddiqi-12pt", "Siddiqi-Ahmad even-point family, 12-point",
                    {"1/167423193907200", "48828113/167423193907200", "410601629/2232309252096",
                     "52548530917/6200859033600", "2471063221063/27903865651200",
                     "1680588922139/5580773130240", "2134020225233/5580773130240",
                     "69086299223/372051542016", "1785493468247/55807731302400",
                     "261595441397/167423193907200", "1975200979/167423193907200",
                     "2187/2066953011200"}));

    put(quaternary("quat-chaikin-derived", "relaxed quaternary twin of binary-chaikin-2pt",
                   true, 0,
                   {"3/16", "3/4", "1/16"},
                   {"5/8", "3/8"}));
    put(quaternary("quat-5pt", "relaxed quaternary twin of binary-siddiqi-4pt", false, 1,
                   {"241/36864", "1189/4608", "1209/2048", "83/576", "37/36864"},
                   {"3/16384", "9733/147456", "38119/73728", "3213/8192", "3623/147456",
                    "1/147456"}));
    put(quaternary("quat-8pt", "relaxed quaternary twin of binary-siddiqi-6pt", true, 1,
                   {"27/1677721600", "2275789/7549747200", "9086963/301989888",
                    "699721619/2516582400", "369990379/754974720", "1426235351/7549747200",
                    "31530847/2516582400", "16027/301989888", "1/15099494400"},
                   {"37199/7549747200", "33580087/7549747200", "290148073/2516582400",
                    "674031991/1509949440", "558397097/1509949440", "157912247/2516582400",
                    "9801833/7549747200", "1681/7549747200"}));
    put(quaternary("quat-11pt", "relaxed quaternary twin of binary-siddiqi-8pt", false, 2,
                   {"698627/852336259891200", "3879598117/284112086630400",
                    "350941180003/142056043315200", "36602385889/676457349120",
                    "5641800724981/20293720473600", "247891317863/579820584960",
                    "527402518309/2536715059200", "2067049873661/71028021657600",
                    "48690122269/56822417326080", "1902910423/852336259891200",
                    "239/20293720473600"},
                   {"27/84181359001600", "30898837/108233175859200",
                    "1754117761421/6818690079129600", "32344488846199/2272896693043200",
                    "163622535291293/1136448346521600", "12926815750607/32469952757760",
                    "56015931444329/162349763788800", "104604880235159/1136448346521600",
                    "75466139809/12025908428800", "148716800989/2272896693043200",
                    "58359331/2272896693043200", "1/6818690079129600"}));
    put(quaternary("quat-14pt-binomial", "relaxed quaternary twin of binary-binomial-10pt",
                   true, 2,
                   {"165125675/1125899906842624", "896759435/140737488355328",
                    "208816685055/1125899906842624", "-350111003385/140737488355328",
                    "15443267900775/1125899906842624", "-845664470365/17592186044416",
                    "165267038051115/1125899906842624", "66176709385215/70368744177664",
                    "-67374962898815/1125899906842624", "1418419563275/140737488355328",
                    "-772276338691/1125899906842624", "-17904682965/140737488355328",
                    "6861145005/1125899906842624", "351267345/70368744177664",
                    "147744025/1125899906842624"},
                   {"-879424975/562949953421312", "-7313797205/562949953421312",
                    "198710020223/281474976710656", "-1928438555615/281474976710656",
                    "20280883755275/562949953421312", "-78511743180975/562949953421312",
                    "105752643189765/140737488355328", "63006444414771/140737488355328",
                    "-64970510830665/562949953421312", "17600920061725/562949953421312",
                    "-1671012940025/281474976710656", "163784577385/281474976710656",
                    "-3080205843/562949953421312", "-759578105/562949953421312"}));
    put(quaternary("quat-14pt", "relaxed quaternary twin of binary-siddiqi-10pt", true, 2,
                   {"3/1379227385882214400", "103850537699/1131138859846651084800",
                    "384468662194361/603274058584880578560",
                    "193184601091081183/1131138859846651084800",
                    "62359154801651076991/9049110878773208678400",
                    "10438071559376400791/141392357480831385600",
                    "116970620124289395991/430910041846343270400",
                    "137915687699480465/359091701538619392",
                    "648462053977087642339/3016370292924402892800",
                    "17125519634472990817/377046286615550361600",
                    "28434156344565775493/9049110878773208678400",
                    "19659422070653153/377046286615550361600",
                    "186238665573617/1809822175754641735680", "346544687/80795632846189363200",
                    "1/9049110878773208678400"},
                   {"213788633/4524555439386604339200", "8408857474501/646365062769514905600",
                    "646332081504007/46168933054965350400",
                    "989843345911370179/754092573231100723200",
                    "23601083531203039271/904911087877320867840",
                    "241716880028225596243/1508185146462201446400",
                    "136704671280724852463/377046286615550361600",
                    "40597867969395053203/125682095538516787200",
                    "24196254751816504787/215455020923171635200",
                    "1800718087517760407/129273012553902981120",
                    "1128217272575781919/2262277719693302169600",
                    "7348484779529681/2262277719693302169600",
                    "1843780220327/1508185146462201446400", "986399/4524555439386604339200"}));
    put(quaternary("quat-17pt", "relaxed quaternary twin of binary-siddiqi-12pt", false, 3,
                   {"170185003/143012887031060669399040000",
                    "11618623511827/2275205020948692467712000",
                    "2639470801758827761/87595393306524660006912000",
                    "268509519026918532793/25027255230435617144832000",
                    "16029066874929664797821/23358771548406576001843200",
                    "11208054761546257498631183/875953933065246600069120000",
                    "32207048328244229783317/361964435150928347136000",
                    "4187024370524574208415201/15926435146640847273984000",
                    "678810440255672301860419/1930476987471617851392000",
                    "689073490261723216665251/3185287029328169454796800",
                    "338960562772283782004933/5688012552371731169280000",
                    "1191634131193759734219757/175190786613049320013824000",
                    "8792959297188237328469/31852870293281694547968000",
                    "19346249685396093203/6488547652335160000512000",
                    "1048707451741153/218988483266311650017280",
                    "245027153519101/875953933065246600069120000",
                    "2450263/1401526292904394560110592000"},
                   {"27/4272294750508747325440000",
                    "358812277001921/28030525858087891202211840000",
                    "2203625183357673913/3503815732260986400276480000",
                    "103411470339072618307/140152629290439456011059200",
                    "637615639085108558009/6229005746241753600491520",
                    "23767610644231508920682471/7007631464521972800552960000",
                    "132394698240692877731080079/3503815732260986400276480000",
                    "7705315847678086375114273/45504100418973849354240000",
                    "17075025982837018547243819/50964592469250711276748800",
                    "1033280151597605241630239/3397639497950047418449920",
                    "40126522029222497908818157/318528702932816945479680000",
                    "79334867894972096989478381/3503815732260986400276480000",
                    "11078992716719243713520413/7007631464521972800552960000",
                    "3248016674151168146933/93435086193626304007372800",
                    "4496423852919659533/28030525858087891202211840",
                    "231433236694503691/3503815732260986400276480000",
                    "8680597683899/28030525858087891202211840000",
                    "1/28030525858087891202211840000"}));
    return cat;
}

const std::map<std::string, double>& published_table() {
    static const std::map<std::string, double> table = {
        {"binary-siddiqi-4pt", 4.124809715},  {"quat-5pt", 4.123978973},
        {"binary-siddiqi-6pt", 6.383689358},  {"quat-8pt", 6.378805452},
        {"binary-siddiqi-8pt", 8.575077912},  {"quat-11pt", 8.561638397},
        {"binary-binomial-10pt", 3.768111637},{"quat-14pt-binomial", 4.571743466},
        {"binary-siddiqi-10pt", 10.67905327}, {"quat-14pt", 10.65483615},
        {"binary-siddiqi-12pt", 12.72368201}, {"quat-17pt", 12.69332847},
    };
    return table;
}

}  // namespace

const std::map<std::string, SubdivisionScheme>& builtin_catalog() {
    static const std::map<std::string, SubdivisionScheme> cat = build_catalog();
    return cat;
}

SubdivisionScheme catalog_get(const std::string& name) {
    const auto& cat = builtin_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw UnknownScheme("unknown scheme '" + name + "'");
    return it->second;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [name, scheme] : builtin_catalog()) out.push_back(name);
    return out;
}

const std::vector<CatalogPair>& conversion_pairs() {
    static const std::vector<CatalogPair> pairs = {
        {"binary-chaikin-2pt", "quat-chaikin-derived"},
        {"binary-siddiqi-4pt", "quat-5pt"},
        {"binary-siddiqi-6pt", "quat-8pt"},
        {"binary-siddiqi-8pt", "quat-11pt"},
        {"binary-binomial-10pt", "quat-14pt-binomial"},
        {"binary-siddiqi-10pt", "quat-14pt"},
        {"binary-siddiqi-12pt", "quat-17pt"},
    };
    return pairs;
}

std::optional<double> published_regularity(const std::string& name) {
    const auto& table = published_table();
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::optional<double> published_regularity_quaternary(const std::string& binary_name) {
    for (const auto& pair : conversion_pairs())
        if (pair.binary == binary_name) return published_regularity(pair.quaternary);
    return std::nullopt;
}

std::optional<DegreeRecord> published_degrees(const std::string& name) {
    static const std::map<std::string, DegreeRecord> table = {
        {"binary-chaikin-2pt", {1, 2}},    {"quat-chaikin-derived", {1, 2}},
        {"binary-siddiqi-4pt", {1, 4}},    {"quat-5pt", {1, 4}},
        {"binary-siddiqi-6pt", {1, 6}},    {"quat-8pt", {1, 6}},
        {"binary-siddiqi-8pt", {1, 8}},    {"quat-11pt", {1, 8}},
        {"binary-binomial-10pt", {9, 10}}, {"quat-14pt-binomial", {9, 10}},
        {"binary-siddiqi-10pt", {1, 10}},  {"quat-14pt", {1, 10}},
        {"binary-siddiqi-12pt", {1, 12}},  {"quat-17pt", {1, 12}},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

}  // namespace subdiv
