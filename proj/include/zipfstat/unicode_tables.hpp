// Generated by tools/gen_unicode_tables.py -- do not edit by hand.
// Unicode 13.0.0 data via CPython's unicodedata module.
#pragma once
#include <cstdint>
#include <cstddef>

namespace zipfstat::tables {

// 622 inclusive [lo,hi] ranges covering general category L*.
struct CpRange { char32_t lo; char32_t hi; };
inline constexpr std::size_t kLetterRangeCount = 622;
inline constexpr CpRange kLetterRanges[] = {
    {0x41,0x5A}, {0x61,0x7A}, {0xAA,0xAA}, {0xB5,0xB5}, {0xBA,0xBA}, {0xC0,0xD6},
    {0xD8,0xF6}, {0xF8,0x2C1}, {0x2C6,0x2D1}, {0x2E0,0x2E4}, {0x2EC,0x2EC}, {0x2EE,0x2EE},
    {0x370,0x374}, {0x376,0x377}, {0x37A,0x37D}, {0x37F,0x37F}, {0x386,0x386}, {0x388,0x38A},
    {0x38C,0x38C}, {0x38E,0x3A1}, {0x3A3,0x3F5}, {0x3F7,0x481}, {0x48A,0x52F}, {0x531,0x556},
    {0x559,0x559}, {0x560,0x588}, {0x5D0,0x5EA}, {0x5EF,0x5F2}, {0x620,0x64A}, {0x66E,0x66F},
    {0x671,0x6D3}, {0x6D5,0x6D5}, {0x6E5,0x6E6}, {0x6EE,0x6EF}, {0x6FA,0x6FC}, {0x6FF,0x6FF},
    {0x710,0x710}, {0x712,0x72F}, {0x74D,0x7A5}, {0x7B1,0x7B1}, {0x7CA,0x7EA}, {0x7F4,0x7F5},
    {0x7FA,0x7FA}, {0x800,0x815}, {0x81A,0x81A}, {0x824,0x824}, {0x828,0x828}, {0x840,0x858},
    {0x860,0x86A}, {0x8A0,0x8B4}, {0x8B6,0x8C7}, {0x904,0x939}, {0x93D,0x93D}, {0x950,0x950},
    {0x958,0x961}, {0x971,0x980}, {0x985,0x98C}, {0x98F,0x990}, {0x993,0x9A8}, {0x9AA,0x9B0},
    {0x9B2,0x9B2}, {0x9B6,0x9B9}, {0x9BD,0x9BD}, {0x9CE,0x9CE}, {0x9DC,0x9DD}, {0x9DF,0x9E1},
    {0x9F0,0x9F1}, {0x9FC,0x9FC}, {0xA05,0xA0A}, {0xA0F,0xA10}, {0xA13,0xA28}, {0xA2A,0xA30},
    {0xA32,0xA33}, {0xA35,0xA36}, {0xA38,0xA39}, {0xA59,0xA5C}, {0xA5E,0xA5E}, {0xA72,0xA74},
    {0xA85,0xA8D}, {0xA8F,0xA91}, {0xA93,0xAA8}, {0xAAA,0xAB0}, {0xAB2,0xAB3}, {0xAB5,0xAB9},
    {0xABD,0xABD}, {0xAD0,0xAD0}, {0xAE0,0xAE1}, {0xAF9,0xAF9}, {0xB05,0xB0C}, {0xB0F,0xB10},
    {0xB13,0xB28}, {0xB2A,0xB30}, {0xB32,0xB33}, {0xB35,0xB39}, {0xB3D,0xB3D}, {0xB5C,0xB5D},
    {0xB5F,0xB61}, {0xB71,0xB71}, {0xB83,0xB83}, {0xB85,0xB8A}, {0xB8E,0xB90}, {0xB92,0xB95},
    {0xB99,0xB9A}, {0xB9C,0xB9C}, {0xB9E,0xB9F}, {0xBA3,0xBA4}, {0xBA8,0xBAA}, {0xBAE,0xBB9},
    {0xBD0,0xBD0}, {0xC05,0xC0C}, {0xC0E,0xC10}, {0xC12,0xC28}, {0xC2A,0xC39}, {0xC3D,0xC3D},
    {0xC58,0xC5A}, {0xC60,0xC61}, {0xC80,0xC80}, {0xC85,0xC8C}, {0xC8E,0xC90}, {0xC92,0xCA8},
    {0xCAA,0xCB3}, {0xCB5,0xCB9}, {0xCBD,0xCBD}, {0xCDE,0xCDE}, {0xCE0,0xCE1}, {0xCF1,0xCF2},
    {0xD04,0xD0C}, {0xD0E,0xD10}, {0xD12,0xD3A}, {0xD3D,0xD3D}, {0xD4E,0xD4E}, {0xD54,0xD56},
    {0xD5F,0xD61}, {0xD7A,0xD7F}, {0xD85,0xD96}, {0xD9A,0xDB1}, {0xDB3,0xDBB}, {0xDBD,0xDBD},
    {0xDC0,0xDC6}, {0xE01,0xE30}, {0xE32,0xE33}, {0xE40,0xE46}, {0xE81,0xE82}, {0xE84,0xE84},
    {0xE86,0xE8A}, {0xE8C,0xEA3}, {0xEA5,0xEA5}, {0xEA7,0xEB0}, {0xEB2,0xEB3}, {0xEBD,0xEBD},
    {0xEC0,0xEC4}, {0xEC6,0xEC6}, {0xEDC,0xEDF}, {0xF00,0xF00}, {0xF40,0xF47}, {0xF49,0xF6C},
    {0xF88,0xF8C}, {0x1000,0x102A}, {0x103F,0x103F}, {0x1050,0x1055}, {0x105A,0x105D}, {0x1061,0x1061},
    {0x1065,0x1066}, {0x106E,0x1070}, {0x1075,0x1081}, {0x108E,0x108E}, {0x10A0,0x10C5}, {0x10C7,0x10C7},
    {0x10CD,0x10CD}, {0x10D0,0x10FA}, {0x10FC,0x1248}, {0x124A,0x124D}, {0x1250,0x1256}, {0x1258,0x1258},
    {0x125A,0x125D}, {0x1260,0x1288}, {0x128A,0x128D}, {0x1290,0x12B0}, {0x12B2,0x12B5}, {0x12B8,0x12BE},
    {0x12C0,0x12C0}, {0x12C2,0x12C5}, {0x12C8,0x12D6}, {0x12D8,0x1310}, {0x1312,0x1315}, {0x1318,0x135A},
    {0x1380,0x138F}, {0x13A0,0x13F5}, {0x13F8,0x13FD}, {0x1401,0x166C}, {0x166F,0x167F}, {0x1681,0x169A},
    {0x16A0,0x16EA}, {0x16F1,0x16F8}, {0x1700,0x170C}, {0x170E,0x1711}, {0x1720,0x1731}, {0x1740,0x1751},
    {0x1760,0x176C}, {0x176E,0x1770}, {0x1780,0x17B3}, {0x17D7,0x17D7}, {0x17DC,0x17DC}, {0x1820,0x1878},
    {0x1880,0x1884}, {0x1887,0x18A8}, {0x18AA,0x18AA}, {0x18B0,0x18F5}, {0x1900,0x191E}, {0x1950,0x196D},
    {0x1970,0x1974}, {0x1980,0x19AB}, {0x19B0,0x19C9}, {0x1A00,0x1A16}, {0x1A20,0x1A54}, {0x1AA7,0x1AA7},
    {0x1B05,0x1B33}, {0x1B45,0x1B4B}, {0x1B83,0x1BA0}, {0x1BAE,0x1BAF}, {0x1BBA,0x1BE5}, {0x1C00,0x1C23},
    {0x1C4D,0x1C4F}, {0x1C5A,0x1C7D}, {0x1C80,0x1C88}, {0x1C90,0x1CBA}, {0x1CBD,0x1CBF}, {0x1CE9,0x1CEC},
    {0x1CEE,0x1CF3}, {0x1CF5,0x1CF6}, {0x1CFA,0x1CFA}, {0x1D00,0x1DBF}, {0x1E00,0x1F15}, {0x1F18,0x1F1D},
    {0x1F20,0x1F45}, {0x1F48,0x1F4D}, {0x1F50,0x1F57}, {0x1F59,0x1F59}, {0x1F5B,0x1F5B}, {0x1F5D,0x1F5D},
    {0x1F5F,0x1F7D}, {0x1F80,0x1FB4}, {0x1FB6,0x1FBC}, {0x1FBE,0x1FBE}, {0x1FC2,0x1FC4}, {0x1FC6,0x1FCC},
    {0x1FD0,0x1FD3}, {0x1FD6,0x1FDB}, {0x1FE0,0x1FEC}, {0x1FF2,0x1FF4}, {0x1FF6,0x1FFC}, {0x2071,0x2071},
    {0x207F,0x207F}, {0x2090,0x209C}, {0x2102,0x2102}, {0x2107,0x2107}, {0x210A,0x2113}, {0x2115,0x2115},
    {0x2119,0x211D}, {0x2124,0x2124}, {0x2126,0x2126}, {0x2128,0x2128}, {0x212A,0x212D}, {0x212F,0x2139},
    {0x213C,0x213F}, {0x2145,0x2149}, {0x214E,0x214E}, {0x2183,0x2184}, {0x2C00,0x2C2E}, {0x2C30,0x2C5E},
    {0x2C60,0x2CE4}, {0x2CEB,0x2CEE}, {0x2CF2,0x2CF3}, {0x2D00,0x2D25}, {0x2D27,0x2D27}, {0x2D2D,0x2D2D},
    {0x2D30,0x2D67}, {0x2D6F,0x2D6F}, {0x2D80,0x2D96}, {0x2DA0,0x2DA6}, {0x2DA8,0x2DAE}, {0x2DB0,0x2DB6},
    {0x2DB8,0x2DBE}, {0x2DC0,0x2DC6}, {0x2DC8,0x2DCE}, {0x2DD0,0x2DD6}, {0x2DD8,0x2DDE}, {0x2E2F,0x2E2F},
    {0x3005,0x3006}, {0x3031,0x3035}, {0x303B,0x303C}, {0x3041,0x3096}, {0x309D,0x309F}, {0x30A1,0x30FA},
    {0x30FC,0x30FF}, {0x3105,0x312F}, {0x3131,0x318E}, {0x31A0,0x31BF}, {0x31F0,0x31FF}, {0x3400,0x4DBF},
    {0x4E00,0x9FFC}, {0xA000,0xA48C}, {0xA4D0,0xA4FD}, {0xA500,0xA60C}, {0xA610,0xA61F}, {0xA62A,0xA62B},
    {0xA640,0xA66E}, {0xA67F,0xA69D}, {0xA6A0,0xA6E5}, {0xA717,0xA71F}, {0xA722,0xA788}, {0xA78B,0xA7BF},
    {0xA7C2,0xA7CA}, {0xA7F5,0xA801}, {0xA803,0xA805}, {0xA807,0xA80A}, {0xA80C,0xA822}, {0xA840,0xA873},
    {0xA882,0xA8B3}, {0xA8F2,0xA8F7}, {0xA8FB,0xA8FB}, {0xA8FD,0xA8FE}, {0xA90A,0xA925}, {0xA930,0xA946},
    {0xA960,0xA97C}, {0xA984,0xA9B2}, {0xA9CF,0xA9CF}, {0xA9E0,0xA9E4}, {0xA9E6,0xA9EF}, {0xA9FA,0xA9FE},
    {0xAA00,0xAA28}, {0xAA40,0xAA42}, {0xAA44,0xAA4B}, {0xAA60,0xAA76}, {0xAA7A,0xAA7A}, {0xAA7E,0xAAAF},
    {0xAAB1,0xAAB1}, {0xAAB5,0xAAB6}, {0xAAB9,0xAABD}, {0xAAC0,0xAAC0}, {0xAAC2,0xAAC2}, {0xAADB,0xAADD},
    {0xAAE0,0xAAEA}, {0xAAF2,0xAAF4}, {0xAB01,0xAB06}, {0xAB09,0xAB0E}, {0xAB11,0xAB16}, {0xAB20,0xAB26},
    {0xAB28,0xAB2E}, {0xAB30,0xAB5A}, {0xAB5C,0xAB69}, {0xAB70,0xABE2}, {0xAC00,0xD7A3}, {0xD7B0,0xD7C6},
    {0xD7CB,0xD7FB}, {0xF900,0xFA6D}, {0xFA70,0xFAD9}, {0xFB00,0xFB06}, {0xFB13,0xFB17}, {0xFB1D,0xFB1D},
    {0xFB1F,0xFB28}, {0xFB2A,0xFB36}, {0xFB38,0xFB3C}, {0xFB3E,0xFB3E}, {0xFB40,0xFB41}, {0xFB43,0xFB44},
    {0xFB46,0xFBB1}, {0xFBD3,0xFD3D}, {0xFD50,0xFD8F}, {0xFD92,0xFDC7}, {0xFDF0,0xFDFB}, {0xFE70,0xFE74},
    {0xFE76,0xFEFC}, {0xFF21,0xFF3A}, {0xFF41,0xFF5A}, {0xFF66,0xFFBE}, {0xFFC2,0xFFC7}, {0xFFCA,0xFFCF},
    {0xFFD2,0xFFD7}, {0xFFDA,0xFFDC}, {0x10000,0x1000B}, {0x1000D,0x10026}, {0x10028,0x1003A}, {0x1003C,0x1003D},
    {0x1003F,0x1004D}, {0x10050,0x1005D}, {0x10080,0x100FA}, {0x10280,0x1029C}, {0x102A0,0x102D0}, {0x10300,0x1031F},
    {0x1032D,0x10340}, {0x10342,0x10349}, {0x10350,0x10375}, {0x10380,0x1039D}, {0x103A0,0x103C3}, {0x103C8,0x103CF},
    {0x10400,0x1049D}, {0x104B0,0x104D3}, {0x104D8,0x104FB}, {0x10500,0x10527}, {0x10530,0x10563}, {0x10600,0x10736},
    {0x10740,0x10755}, {0x10760,0x10767}, {0x10800,0x10805}, {0x10808,0x10808}, {0x1080A,0x10835}, {0x10837,0x10838},
    {0x1083C,0x1083C}, {0x1083F,0x10855}, {0x10860,0x10876}, {0x10880,0x1089E}, {0x108E0,0x108F2}, {0x108F4,0x108F5},
    {0x10900,0x10915}, {0x10920,0x10939}, {0x10980,0x109B7}, {0x109BE,0x109BF}, {0x10A00,0x10A00}, {0x10A10,0x10A13},
    {0x10A15,0x10A17}, {0x10A19,0x10A35}, {0x10A60,0x10A7C}, {0x10A80,0x10A9C}, {0x10AC0,0x10AC7}, {0x10AC9,0x10AE4},
    {0x10B00,0x10B35}, {0x10B40,0x10B55}, {0x10B60,0x10B72}, {0x10B80,0x10B91}, {0x10C00,0x10C48}, {0x10C80,0x10CB2},
    {0x10CC0,0x10CF2}, {0x10D00,0x10D23}, {0x10E80,0x10EA9}, {0x10EB0,0x10EB1}, {0x10F00,0x10F1C}, {0x10F27,0x10F27},
    {0x10F30,0x10F45}, {0x10FB0,0x10FC4}, {0x10FE0,0x10FF6}, {0x11003,0x11037}, {0x11083,0x110AF}, {0x110D0,0x110E8},
    {0x11103,0x11126}, {0x11144,0x11144}, {0x11147,0x11147}, {0x11150,0x11172}, {0x11176,0x11176}, {0x11183,0x111B2},
    {0x111C1,0x111C4}, {0x111DA,0x111DA}, {0x111DC,0x111DC}, {0x11200,0x11211}, {0x11213,0x1122B}, {0x11280,0x11286},
    {0x11288,0x11288}, {0x1128A,0x1128D}, {0x1128F,0x1129D}, {0x1129F,0x112A8}, {0x112B0,0x112DE}, {0x11305,0x1130C},
    {0x1130F,0x11310}, {0x11313,0x11328}, {0x1132A,0x11330}, {0x11332,0x11333}, {0x11335,0x11339}, {0x1133D,0x1133D},
    {0x11350,0x11350}, {0x1135D,0x11361}, {0x11400,0x11434}, {0x11447,0x1144A}, {0x1145F,0x11461}, {0x11480,0x114AF},
    {0x114C4,0x114C5}, {0x114C7,0x114C7}, {0x11580,0x115AE}, {0x115D8,0x115DB}, {0x11600,0x1162F}, {0x11644,0x11644},
    {0x11680,0x116AA}, {0x116B8,0x116B8}, {0x11700,0x1171A}, {0x11800,0x1182B}, {0x118A0,0x118DF}, {0x118FF,0x11906},
    {0x11909,0x11909}, {0x1190C,0x11913}, {0x11915,0x11916}, {0x11918,0x1192F}, {0x1193F,0x1193F}, {0x11941,0x11941},
    {0x119A0,0x119A7}, {0x119AA,0x119D0}, {0x119E1,0x119E1}, {0x119E3,0x119E3}, {0x11A00,0x11A00}, {0x11A0B,0x11A32},
    {0x11A3A,0x11A3A}, {0x11A50,0x11A50}, {0x11A5C,0x11A89}, {0x11A9D,0x11A9D}, {0x11AC0,0x11AF8}, {0x11C00,0x11C08},
    {0x11C0A,0x11C2E}, {0x11C40,0x11C40}, {0x11C72,0x11C8F}, {0x11D00,0x11D06}, {0x11D08,0x11D09}, {0x11D0B,0x11D30},
    {0x11D46,0x11D46}, {0x11D60,0x11D65}, {0x11D67,0x11D68}, {0x11D6A,0x11D89}, {0x11D98,0x11D98}, {0x11EE0,0x11EF2},
    {0x11FB0,0x11FB0}, {0x12000,0x12399}, {0x12480,0x12543}, {0x13000,0x1342E}, {0x14400,0x14646}, {0x16800,0x16A38},
    {0x16A40,0x16A5E}, {0x16AD0,0x16AED}, {0x16B00,0x16B2F}, {0x16B40,0x16B43}, {0x16B63,0x16B77}, {0x16B7D,0x16B8F},
    {0x16E40,0x16E7F}, {0x16F00,0x16F4A}, {0x16F50,0x16F50}, {0x16F93,0x16F9F}, {0x16FE0,0x16FE1}, {0x16FE3,0x16FE3},
    {0x17000,0x187F7}, {0x18800,0x18CD5}, {0x18D00,0x18D08}, {0x1B000,0x1B11E}, {0x1B150,0x1B152}, {0x1B164,0x1B167},
    {0x1B170,0x1B2FB}, {0x1BC00,0x1BC6A}, {0x1BC70,0x1BC7C}, {0x1BC80,0x1BC88}, {0x1BC90,0x1BC99}, {0x1D400,0x1D454},
    {0x1D456,0x1D49C}, {0x1D49E,0x1D49F}, {0x1D4A2,0x1D4A2}, {0x1D4A5,0x1D4A6}, {0x1D4A9,0x1D4AC}, {0x1D4AE,0x1D4B9},
    {0x1D4BB,0x1D4BB}, {0x1D4BD,0x1D4C3}, {0x1D4C5,0x1D505}, {0x1D507,0x1D50A}, {0x1D50D,0x1D514}, {0x1D516,0x1D51C},
    {0x1D51E,0x1D539}, {0x1D53B,0x1D53E}, {0x1D540,0x1D544}, {0x1D546,0x1D546}, {0x1D54A,0x1D550}, {0x1D552,0x1D6A5},
    {0x1D6A8,0x1D6C0}, {0x1D6C2,0x1D6DA}, {0x1D6DC,0x1D6FA}, {0x1D6FC,0x1D714}, {0x1D716,0x1D734}, {0x1D736,0x1D74E},
    {0x1D750,0x1D76E}, {0x1D770,0x1D788}, {0x1D78A,0x1D7A8}, {0x1D7AA,0x1D7C2}, {0x1D7C4,0x1D7CB}, {0x1E100,0x1E12C},
    {0x1E137,0x1E13D}, {0x1E14E,0x1E14E}, {0x1E2C0,0x1E2EB}, {0x1E800,0x1E8C4}, {0x1E900,0x1E943}, {0x1E94B,0x1E94B},
    {0x1EE00,0x1EE03}, {0x1EE05,0x1EE1F}, {0x1EE21,0x1EE22}, {0x1EE24,0x1EE24}, {0x1EE27,0x1EE27}, {0x1EE29,0x1EE32},
    {0x1EE34,0x1EE37}, {0x1EE39,0x1EE39}, {0x1EE3B,0x1EE3B}, {0x1EE42,0x1EE42}, {0x1EE47,0x1EE47}, {0x1EE49,0x1EE49},
    {0x1EE4B,0x1EE4B}, {0x1EE4D,0x1EE4F}, {0x1EE51,0x1EE52}, {0x1EE54,0x1EE54}, {0x1EE57,0x1EE57}, {0x1EE59,0x1EE59},
    {0x1EE5B,0x1EE5B}, {0x1EE5D,0x1EE5D}, {0x1EE5F,0x1EE5F}, {0x1EE61,0x1EE62}, {0x1EE64,0x1EE64}, {0x1EE67,0x1EE6A},
    {0x1EE6C,0x1EE72}, {0x1EE74,0x1EE77}, {0x1EE79,0x1EE7C}, {0x1EE7E,0x1EE7E}, {0x1EE80,0x1EE89}, {0x1EE8B,0x1EE9B},
    {0x1EEA1,0x1EEA3}, {0x1EEA5,0x1EEA9}, {0x1EEAB,0x1EEBB}, {0x20000,0x2A6DD}, {0x2A700,0x2B734}, {0x2B740,0x2B81D},
    {0x2B820,0x2CEA1}, {0x2CEB0,0x2EBE0}, {0x2F800,0x2FA1D}, {0x30000,0x3134A},
};

// Full case folding: 1490 code points fold to a sequence of 1..3
// code points stored consecutively in kFoldData.
struct FoldEntry { char32_t cp; std::uint32_t offset; std::uint32_t length; };
inline constexpr std::size_t kFoldEntryCount = 1490;
inline constexpr FoldEntry kFoldEntries[] = {
    {0x41,0,1}, {0x42,1,1}, {0x43,2,1}, {0x44,3,1}, {0x45,4,1},
    {0x46,5,1}, {0x47,6,1}, {0x48,7,1}, {0x49,8,1}, {0x4A,9,1},
    {0x4B,10,1}, {0x4C,11,1}, {0x4D,12,1}, {0x4E,13,1}, {0x4F,14,1},
    {0x50,15,1}, {0x51,16,1}, {0x52,17,1}, {0x53,18,1}, {0x54,19,1},
    {0x55,20,1}, {0x56,21,1}, {0x57,22,1}, {0x58,23,1}, {0x59,24,1},
    {0x5A,25,1}, {0xB5,26,1}, {0xC0,27,1}, {0xC1,28,1}, {0xC2,29,1},
    {0xC3,30,1}, {0xC4,31,1}, {0xC5,32,1}, {0xC6,33,1}, {0xC7,34,1},
    {0xC8,35,1}, {0xC9,36,1}, {0xCA,37,1}, {0xCB,38,1}, {0xCC,39,1},
    {0xCD,40,1}, {0xCE,41,1}, {0xCF,42,1}, {0xD0,43,1}, {0xD1,44,1},
    {0xD2,45,1}, {0xD3,46,1}, {0xD4,47,1}, {0xD5,48,1}, {0xD6,49,1},
    {0xD8,50,1}, {0xD9,51,1}, {0xDA,52,1}, {0xDB,53,1}, {0xDC,54,1},
    {0xDD,55,1}, {0xDE,56,1}, {0xDF,57,2}, {0x100,59,1}, {0x102,60,1},
    {0x104,61,1}, {0x106,62,1}, {0x108,63,1}, {0x10A,64,1}, {0x10C,65,1},
    {0x10E,66,1}, {0x110,67,1}, {0x112,68,1}, {0x114,69,1}, {0x116,70,1},
    {0x118,71,1}, {0x11A,72,1}, {0x11C,73,1}, {0x11E,74,1}, {0x120,75,1},
    {0x122,76,1}, {0x124,77,1}, {0x126,78,1}, {0x128,79,1}, {0x12A,80,1},
    {0x12C,81,1}, {0x12E,82,1}, {0x130,83,2}, {0x132,85,1}, {0x134,86,1},
    {0x136,87,1}, {0x139,88,1}, {0x13B,89,1}, {0x13D,90,1}, {0x13F,91,1},
    {0x141,92,1}, {0x143,93,1}, {0x145,94,1}, {0x147,95,1}, {0x149,96,2},
    {0x14A,98,1}, {0x14C,99,1}, {0x14E,100,1}, {0x150,101,1}, {0x152,102,1},
    {0x154,103,1}, {0x156,104,1}, {0x158,105,1}, {0x15A,106,1}, {0x15C,107,1},
    {0x15E,108,1}, {0x160,109,1}, {0x162,110,1}, {0x164,111,1}, {0x166,112,1},
    {0x168,113,1}, {0x16A,114,1}, {0x16C,115,1}, {0x16E,116,1}, {0x170,117,1},
    {0x172,118,1}, {0x174,119,1}, {0x176,120,1}, {0x178,121,1}, {0x179,122,1},
    {0x17B,123,1}, {0x17D,124,1}, {0x17F,125,1}, {0x181,126,1}, {0x182,127,1},
    {0x184,128,1}, {0x186,129,1}, {0x187,130,1}, {0x189,131,1}, {0x18A,132,1},
    {0x18B,133,1}, {0x18E,134,1}, {0x18F,135,1}, {0x190,136,1}, {0x191,137,1},
    {0x193,138,1}, {0x194,139,1}, {0x196,140,1}, {0x197,141,1}, {0x198,142,1},
    {0x19C,143,1}, {0x19D,144,1}, {0x19F,145,1}, {0x1A0,146,1}, {0x1A2,147,1},
    {0x1A4,148,1}, {0x1A6,149,1}, {0x1A7,150,1}, {0x1A9,151,1}, {0x1AC,152,1},
    {0x1AE,153,1}, {0x1AF,154,1}, {0x1B1,155,1}, {0x1B2,156,1}, {0x1B3,157,1},
    {0x1B5,158,1}, {0x1B7,159,1}, {0x1B8,160,1}, {0x1BC,161,1}, {0x1C4,162,1},
    {0x1C5,163,1}, {0x1C7,164,1}, {0x1C8,165,1}, {0x1CA,166,1}, {0x1CB,167,1},
    {0x1CD,168,1}, {0x1CF,169,1}, {0x1D1,170,1}, {0x1D3,171,1}, {0x1D5,172,1},
    {0x1D7,173,1}, {0x1D9,174,1}, {0x1DB,175,1}, {0x1DE,176,1}, {0x1E0,177,1},
    {0x1E2,178,1}, {0x1E4,179,1}, {0x1E6,180,1}, {0x1E8,181,1}, {0x1EA,182,1},
    {0x1EC,183,1}, {0x1EE,184,1}, {0x1F0,185,2}, {0x1F1,187,1}, {0x1F2,188,1},
    {0x1F4,189,1}, {0x1F6,190,1}, {0x1F7,191,1}, {0x1F8,192,1}, {0x1FA,193,1},
    {0x1FC,194,1}, {0x1FE,195,1}, {0x200,196,1}, {0x202,197,1}, {0x204,198,1},
    {0x206,199,1}, {0x208,200,1}, {0x20A,201,1}, {0x20C,202,1}, {0x20E,203,1},
    {0x210,204,1}, {0x212,205,1}, {0x214,206,1}, {0x216,207,1}, {0x218,208,1},
    {0x21A,209,1}, {0x21C,210,1}, {0x21E,211,1}, {0x220,212,1}, {0x222,213,1},
    {0x224,214,1}, {0x226,215,1}, {0x228,216,1}, {0x22A,217,1}, {0x22C,218,1},
    {0x22E,219,1}, {0x230,220,1}, {0x232,221,1}, {0x23A,222,1}, {0x23B,223,1},
    {0x23D,224,1}, {0x23E,225,1}, {0x241,226,1}, {0x243,227,1}, {0x244,228,1},
    {0x245,229,1}, {0x246,230,1}, {0x248,231,1}, {0x24A,232,1}, {0x24C,233,1},
    {0x24E,234,1}, {0x345,235,1}, {0x370,236,1}, {0x372,237,1}, {0x376,238,1},
    {0x37F,239,1}, {0x386,240,1}, {0x388,241,1}, {0x389,242,1}, {0x38A,243,1},
    {0x38C,244,1}, {0x38E,245,1}, {0x38F,246,1}, {0x390,247,3}, {0x391,250,1},
    {0x392,251,1}, {0x393,252,1}, {0x394,253,1}, {0x395,254,1}, {0x396,255,1},
    {0x397,256,1}, {0x398,257,1}, {0x399,258,1}, {0x39A,259,1}, {0x39B,260,1},
    {0x39C,261,1}, {0x39D,262,1}, {0x39E,263,1}, {0x39F,264,1}, {0x3A0,265,1},
    {0x3A1,266,1}, {0x3A3,267,1}, {0x3A4,268,1}, {0x3A5,269,1}, {0x3A6,270,1},
    {0x3A7,271,1}, {0x3A8,272,1}, {0x3A9,273,1}, {0x3AA,274,1}, {0x3AB,275,1},
    {0x3B0,276,3}, {0x3C2,279,1}, {0x3CF,280,1}, {0x3D0,281,1}, {0x3D1,282,1},
    {0x3D5,283,1}, {0x3D6,284,1}, {0x3D8,285,1}, {0x3DA,286,1}, {0x3DC,287,1},
    {0x3DE,288,1}, {0x3E0,289,1}, {0x3E2,290,1}, {0x3E4,291,1}, {0x3E6,292,1},
    {0x3E8,293,1}, {0x3EA,294,1}, {0x3EC,295,1}, {0x3EE,296,1}, {0x3F0,297,1},
    {0x3F1,298,1}, {0x3F4,299,1}, {0x3F5,300,1}, {0x3F7,301,1}, {0x3F9,302,1},
    {0x3FA,303,1}, {0x3FD,304,1}, {0x3FE,305,1}, {0x3FF,306,1}, {0x400,307,1},
    {0x401,308,1}, {0x402,309,1}, {0x403,310,1}, {0x404,311,1}, {0x405,312,1},
    {0x406,313,1}, {0x407,314,1}, {0x408,315,1}, {0x409,316,1}, {0x40A,317,1},
    {0x40B,318,1}, {0x40C,319,1}, {0x40D,320,1}, {0x40E,321,1}, {0x40F,322,1},
    {0x410,323,1}, {0x411,324,1}, {0x412,325,1}, {0x413,326,1}, {0x414,327,1},
    {0x415,328,1}, {0x416,329,1}, {0x417,330,1}, {0x418,331,1}, {0x419,332,1},
    {0x41A,333,1}, {0x41B,334,1}, {0x41C,335,1}, {0x41D,336,1}, {0x41E,337,1},
    {0x41F,338,1}, {0x420,339,1}, {0x421,340,1}, {0x422,341,1}, {0x423,342,1},
    {0x424,343,1}, {0x425,344,1}, {0x426,345,1}, {0x427,346,1}, {0x428,347,1},
    {0x429,348,1}, {0x42A,349,1}, {0x42B,350,1}, {0x42C,351,1}, {0x42D,352,1},
    {0x42E,353,1}, {0x42F,354,1}, {0x460,355,1}, {0x462,356,1}, {0x464,357,1},
    {0x466,358,1}, {0x468,359,1}, {0x46A,360,1}, {0x46C,361,1}, {0x46E,362,1},
    {0x470,363,1}, {0x472,364,1}, {0x474,365,1}, {0x476,366,1}, {0x478,367,1},
    {0x47A,368,1}, {0x47C,369,1}, {0x47E,370,1}, {0x480,371,1}, {0x48A,372,1},
    {0x48C,373,1}, {0x48E,374,1}, {0x490,375,1}, {0x492,376,1}, {0x494,377,1},
    {0x496,378,1}, {0x498,379,1}, {0x49A,380,1}, {0x49C,381,1}, {0x49E,382,1},
    {0x4A0,383,1}, {0x4A2,384,1}, {0x4A4,385,1}, {0x4A6,386,1}, {0x4A8,387,1},
    {0x4AA,388,1}, {0x4AC,389,1}, {0x4AE,390,1}, {0x4B0,391,1}, {0x4B2,392,1},
    {0x4B4,393,1}, {0x4B6,394,1}, {0x4B8,395,1}, {0x4BA,396,1}, {0x4BC,397,1},
    {0x4BE,398,1}, {0x4C0,399,1}, {0x4C1,400,1}, {0x4C3,401,1}, {0x4C5,402,1},
    {0x4C7,403,1}, {0x4C9,404,1}, {0x4CB,405,1}, {0x4CD,406,1}, {0x4D0,407,1},
    {0x4D2,408,1}, {0x4D4,409,1}, {0x4D6,410,1}, {0x4D8,411,1}, {0x4DA,412,1},
    {0x4DC,413,1}, {0x4DE,414,1}, {0x4E0,415,1}, {0x4E2,416,1}, {0x4E4,417,1},
    {0x4E6,418,1}, {0x4E8,419,1}, {0x4EA,420,1}, {0x4EC,421,1}, {0x4EE,422,1},
    {0x4F0,423,1}, {0x4F2,424,1}, {0x4F4,425,1}, {0x4F6,426,1}, {0x4F8,427,1},
    {0x4FA,428,1}, {0x4FC,429,1}, {0x4FE,430,1}, {0x500,431,1}, {0x502,432,1},
    {0x504,433,1}, {0x506,434,1}, {0x508,435,1}, {0x50A,436,1}, {0x50C,437,1},
    {0x50E,438,1}, {0x510,439,1}, {0x512,440,1}, {0x514,441,1}, {0x516,442,1},
    {0x518,443,1}, {0x51A,444,1}, {0x51C,445,1}, {0x51E,446,1}, {0x520,447,1},
    {0x522,448,1}, {0x524,449,1}, {0x526,450,1}, {0x528,451,1}, {0x52A,452,1},
    {0x52C,453,1}, {0x52E,454,1}, {0x531,455,1}, {0x532,456,1}, {0x533,457,1},
    {0x534,458,1}, {0x535,459,1}, {0x536,460,1}, {0x537,461,1}, {0x538,462,1},
    {0x539,463,1}, {0x53A,464,1}, {0x53B,465,1}, {0x53C,466,1}, {0x53D,467,1},
    {0x53E,468,1}, {0x53F,469,1}, {0x540,470,1}, {0x541,471,1}, {0x542,472,1},
    {0x543,473,1}, {0x544,474,1}, {0x545,475,1}, {0x546,476,1}, {0x547,477,1},
    {0x548,478,1}, {0x549,479,1}, {0x54A,480,1}, {0x54B,481,1}, {0x54C,482,1},
    {0x54D,483,1}, {0x54E,484,1}, {0x54F,485,1}, {0x550,486,1}, {0x551,487,1},
    {0x552,488,1}, {0x553,489,1}, {0x554,490,1}, {0x555,491,1}, {0x556,492,1},
    {0x587,493,2}, {0x10A0,495,1}, {0x10A1,496,1}, {0x10A2,497,1}, {0x10A3,498,1},
    {0x10A4,499,1}, {0x10A5,500,1}, {0x10A6,501,1}, {0x10A7,502,1}, {0x10A8,503,1},
    {0x10A9,504,1}, {0x10AA,505,1}, {0x10AB,506,1}, {0x10AC,507,1}, {0x10AD,508,1},
    {0x10AE,509,1}, {0x10AF,510,1}, {0x10B0,511,1}, {0x10B1,512,1}, {0x10B2,513,1},
    {0x10B3,514,1}, {0x10B4,515,1}, {0x10B5,516,1}, {0x10B6,517,1}, {0x10B7,518,1},
    {0x10B8,519,1}, {0x10B9,520,1}, {0x10BA,521,1}, {0x10BB,522,1}, {0x10BC,523,1},
    {0x10BD,524,1}, {0x10BE,525,1}, {0x10BF,526,1}, {0x10C0,527,1}, {0x10C1,528,1},
    {0x10C2,529,1}, {0x10C3,530,1}, {0x10C4,531,1}, {0x10C5,532,1}, {0x10C7,533,1},
    {0x10CD,534,1}, {0x13F8,535,1}, {0x13F9,536,1}, {0x13FA,537,1}, {0x13FB,538,1},
    {0x13FC,539,1}, {0x13FD,540,1}, {0x1C80,541,1}, {0x1C81,542,1}, {0x1C82,543,1},
    {0x1C83,544,1}, {0x1C84,545,1}, {0x1C85,546,1}, {0x1C86,547,1}, {0x1C87,548,1},
    {0x1C88,549,1}, {0x1C90,550,1}, {0x1C91,551,1}, {0x1C92,552,1}, {0x1C93,553,1},
    {0x1C94,554,1}, {0x1C95,555,1}, {0x1C96,556,1}, {0x1C97,557,1}, {0x1C98,558,1},
    {0x1C99,559,1}, {0x1C9A,560,1}, {0x1C9B,561,1}, {0x1C9C,562,1}, {0x1C9D,563,1},
    {0x1C9E,564,1}, {0x1C9F,565,1}, {0x1CA0,566,1}, {0x1CA1,567,1}, {0x1CA2,568,1},
    {0x1CA3,569,1}, {0x1CA4,570,1}, {0x1CA5,571,1}, {0x1CA6,572,1}, {0x1CA7,573,1},
    {0x1CA8,574,1}, {0x1CA9,575,1}, {0x1CAA,576,1}, {0x1CAB,577,1}, {0x1CAC,578,1},
    {0x1CAD,579,1}, {0x1CAE,580,1}, {0x1CAF,581,1}, {0x1CB0,582,1}, {0x1CB1,583,1},
    {0x1CB2,584,1}, {0x1CB3,585,1}, {0x1CB4,586,1}, {0x1CB5,587,1}, {0x1CB6,588,1},
    {0x1CB7,589,1}, {0x1CB8,590,1}, {0x1CB9,591,1}, {0x1CBA,592,1}, {0x1CBD,593,1},
    {0x1CBE,594,1}, {0x1CBF,595,1}, {0x1E00,596,1}, {0x1E02,597,1}, {0x1E04,598,1},
    {0x1E06,599,1}, {0x1E08,600,1}, {0x1E0A,601,1}, {0x1E0C,602,1}, {0x1E0E,603,1},
    {0x1E10,604,1}, {0x1E12,605,1}, {0x1E14,606,1}, {0x1E16,607,1}, {0x1E18,608,1},
    {0x1E1A,609,1}, {0x1E1C,610,1}, {0x1E1E,611,1}, {0x1E20,612,1}, {0x1E22,613,1},
    {0x1E24,614,1}, {0x1E26,615,1}, {0x1E28,616,1}, {0x1E2A,617,1}, {0x1E2C,618,1},
    {0x1E2E,619,1}, {0x1E30,620,1}, {0x1E32,621,1}, {0x1E34,622,1}, {0x1E36,623,1},
    {0x1E38,624,1}, {0x1E3A,625,1}, {0x1E3C,626,1}, {0x1E3E,627,1}, {0x1E40,628,1},
    {0x1E42,629,1}, {0x1E44,630,1}, {0x1E46,631,1}, {0x1E48,632,1}, {0x1E4A,633,1},
    {0x1E4C,634,1}, {0x1E4E,635,1}, {0x1E50,636,1}, {0x1E52,637,1}, {0x1E54,638,1},
    {0x1E56,639,1}, {0x1E58,640,1}, {0x1E5A,641,1}, {0x1E5C,642,1}, {0x1E5E,643,1},
    {0x1E60,644,1}, {0x1E62,645,1}, {0x1E64,646,1}, {0x1E66,647,1}, {0x1E68,648,1},
    {0x1E6A,649,1}, {0x1E6C,650,1}, {0x1E6E,651,1}, {0x1E70,652,1}, {0x1E72,653,1},
    {0x1E74,654,1}, {0x1E76,655,1}, {0x1E78,656,1}, {0x1E7A,657,1}, {0x1E7C,658,1},
    {0x1E7E,659,1}, {0x1E80,660,1}, {0x1E82,661,1}, {0x1E84,662,1}, {0x1E86,663,1},
    {0x1E88,664,1}, {0x1E8A,665,1}, {0x1E8C,666,1}, {0x1E8E,667,1}, {0x1E90,668,1},
    {0x1E92,669,1}, {0x1E94,670,1}, {0x1E96,671,2}, {0x1E97,673,2}, {0x1E98,675,2},
    {0x1E99,677,2}, {0x1E9A,679,2}, {0x1E9B,681,1}, {0x1E9E,682,2}, {0x1EA0,684,1},
    {0x1EA2,685,1}, {0x1EA4,686,1}, {0x1EA6,687,1}, {0x1EA8,688,1}, {0x1EAA,689,1},
    {0x1EAC,690,1}, {0x1EAE,691,1}, {0x1EB0,692,1}, {0x1EB2,693,1}, {0x1EB4,694,1},
    {0x1EB6,695,1}, {0x1EB8,696,1}, {0x1EBA,697,1}, {0x1EBC,698,1}, {0x1EBE,699,1},
    {0x1EC0,700,1}, {0x1EC2,701,1}, {0x1EC4,702,1}, {0x1EC6,703,1}, {0x1EC8,704,1},
    {0x1ECA,705,1}, {0x1ECC,706,1}, {0x1ECE,707,1}, {0x1ED0,708,1}, {0x1ED2,709,1},
    {0x1ED4,710,1}, {0x1ED6,711,1}, {0x1ED8,712,1}, {0x1EDA,713,1}, {0x1EDC,714,1},
    {0x1EDE,715,1}, {0x1EE0,716,1}, {0x1EE2,717,1}, {0x1EE4,718,1}, {0x1EE6,719,1},
    {0x1EE8,720,1}, {0x1EEA,721,1}, {0x1EEC,722,1}, {0x1EEE,723,1}, {0x1EF0,724,1},
    {0x1EF2,725,1}, {0x1EF4,726,1}, {0x1EF6,727,1}, {0x1EF8,728,1}, {0x1EFA,729,1},
    {0x1EFC,730,1}, {0x1EFE,731,1}, {0x1F08,732,1}, {0x1F09,733,1}, {0x1F0A,734,1},
    {0x1F0B,735,1}, {0x1F0C,736,1}, {0x1F0D,737,1}, {0x1F0E,738,1}, {0x1F0F,739,1},
    {0x1F18,740,1}, {0x1F19,741,1}, {0x1F1A,742,1}, {0x1F1B,743,1}, {0x1F1C,744,1},
    {0x1F1D,745,1}, {0x1F28,746,1}, {0x1F29,747,1}, {0x1F2A,748,1}, {0x1F2B,749,1},
    {0x1F2C,750,1}, {0x1F2D,751,1}, {0x1F2E,752,1}, {0x1F2F,753,1}, {0x1F38,754,1},
    {0x1F39,755,1}, {0x1F3A,756,1}, {0x1F3B,757,1}, {0x1F3C,758,1}, {0x1F3D,759,1},
    {0x1F3E,760,1}, {0x1F3F,761,1}, {0x1F48,762,1}, {0x1F49,763,1}, {0x1F4A,764,1},
    {0x1F4B,765,1}, {0x1F4C,766,1}, {0x1F4D,767,1}, {0x1F50,768,2}, {0x1F52,770,3},
    {0x1F54,773,3}, {0x1F56,776,3}, {0x1F59,779,1}, {0x1F5B,780,1}, {0x1F5D,781,1},
    {0x1F5F,782,1}, {0x1F68,783,1}, {0x1F69,784,1}, {0x1F6A,785,1}, {0x1F6B,786,1},
    {0x1F6C,787,1}, {0x1F6D,788,1}, {0x1F6E,789,1}, {0x1F6F,790,1}, {0x1F80,791,2},
    {0x1F81,793,2}, {0x1F82,795,2}, {0x1F83,797,2}, {0x1F84,799,2}, {0x1F85,801,2},
    {0x1F86,803,2}, {0x1F87,805,2}, {0x1F88,807,2}, {0x1F89,809,2}, {0x1F8A,811,2},
    {0x1F8B,813,2}, {0x1F8C,815,2}, {0x1F8D,817,2}, {0x1F8E,819,2}, {0x1F8F,821,2},
    {0x1F90,823,2}, {0x1F91,825,2}, {0x1F92,827,2}, {0x1F93,829,2}, {0x1F94,831,2},
    {0x1F95,833,2}, {0x1F96,835,2}, {0x1F97,837,2}, {0x1F98,839,2}, {0x1F99,841,2},
    {0x1F9A,843,2}, {0x1F9B,845,2}, {0x1F9C,847,2}, {0x1F9D,849,2}, {0x1F9E,851,2},
    {0x1F9F,853,2}, {0x1FA0,855,2}, {0x1FA1,857,2}, {0x1FA2,859,2}, {0x1FA3,861,2},
    {0x1FA4,863,2}, {0x1FA5,865,2}, {0x1FA6,867,2}, {0x1FA7,869,2}, {0x1FA8,871,2},
    {0x1FA9,873,2}, {0x1FAA,875,2}, {0x1FAB,877,2}, {0x1FAC,879,2}, {0x1FAD,881,2},
    {0x1FAE,883,2}, {0x1FAF,885,2}, {0x1FB2,887,2}, {0x1FB3,889,2}, {0x1FB4,891,2},
    {0x1FB6,893,2}, {0x1FB7,895,3}, {0x1FB8,898,1}, {0x1FB9,899,1}, {0x1FBA,900,1},
    {0x1FBB,901,1}, {0x1FBC,902,2}, {0x1FBE,904,1}, {0x1FC2,905,2}, {0x1FC3,907,2},
    {0x1FC4,909,2}, {0x1FC6,911,2}, {0x1FC7,913,3}, {0x1FC8,916,1}, {0x1FC9,917,1},
    {0x1FCA,918,1}, {0x1FCB,919,1}, {0x1FCC,920,2}, {0x1FD2,922,3}, {0x1FD3,925,3},
    {0x1FD6,928,2}, {0x1FD7,930,3}, {0x1FD8,933,1}, {0x1FD9,934,1}, {0x1FDA,935,1},
    {0x1FDB,936,1}, {0x1FE2,937,3}, {0x1FE3,940,3}, {0x1FE4,943,2}, {0x1FE6,945,2},
    {0x1FE7,947,3}, {0x1FE8,950,1}, {0x1FE9,951,1}, {0x1FEA,952,1}, {0x1FEB,953,1},
    {0x1FEC,954,1}, {0x1FF2,955,2}, {0x1FF3,957,2}, {0x1FF4,959,2}, {0x1FF6,961,2},
    {0x1FF7,963,3}, {0x1FF8,966,1}, {0x1FF9,967,1}, {0x1FFA,968,1}, {0x1FFB,969,1},
    {0x1FFC,970,2}, {0x2126,972,1}, {0x212A,973,1}, {0x212B,974,1}, {0x2132,975,1},
    {0x2160,976,1}, {0x2161,977,1}, {0x2162,978,1}, {0x2163,979,1}, {0x2164,980,1},
    {0x2165,981,1}, {0x2166,982,1}, {0x2167,983,1}, {0x2168,984,1}, {0x2169,985,1},
    {0x216A,986,1}, {0x216B,987,1}, {0x216C,988,1}, {0x216D,989,1}, {0x216E,990,1},
    {0x216F,991,1}, {0x2183,992,1}, {0x24B6,993,1}, {0x24B7,994,1}, {0x24B8,995,1},
    {0x24B9,996,1}, {0x24BA,997,1}, {0x24BB,998,1}, {0x24BC,999,1}, {0x24BD,1000,1},
    {0x24BE,1001,1}, {0x24BF,1002,1}, {0x24C0,1003,1}, {0x24C1,1004,1}, {0x24C2,1005,1},
    {0x24C3,1006,1}, {0x24C4,1007,1}, {0x24C5,1008,1}, {0x24C6,1009,1}, {0x24C7,1010,1},
    {0x24C8,1011,1}, {0x24C9,1012,1}, {0x24CA,1013,1}, {0x24CB,1014,1}, {0x24CC,1015,1},
    {0x24CD,1016,1}, {0x24CE,1017,1}, {0x24CF,1018,1}, {0x2C00,1019,1}, {0x2C01,1020,1},
    {0x2C02,1021,1}, {0x2C03,1022,1}, {0x2C04,1023,1}, {0x2C05,1024,1}, {0x2C06,1025,1},
    {0x2C07,1026,1}, {0x2C08,1027,1}, {0x2C09,1028,1}, {0x2C0A,1029,1}, {0x2C0B,1030,1},
    {0x2C0C,1031,1}, {0x2C0D,1032,1}, {0x2C0E,1033,1}, {0x2C0F,1034,1}, {0x2C10,1035,1},
    {0x2C11,1036,1}, {0x2C12,1037,1}, {0x2C13,1038,1}, {0x2C14,1039,1}, {0x2C15,1040,1},
    {0x2C16,1041,1}, {0x2C17,1042,1}, {0x2C18,1043,1}, {0x2C19,1044,1}, {0x2C1A,1045,1},
    {0x2C1B,1046,1}, {0x2C1C,1047,1}, {0x2C1D,1048,1}, {0x2C1E,1049,1}, {0x2C1F,1050,1},
    {0x2C20,1051,1}, {0x2C21,1052,1}, {0x2C22,1053,1}, {0x2C23,1054,1}, {0x2C24,1055,1},
    {0x2C25,1056,1}, {0x2C26,1057,1}, {0x2C27,1058,1}, {0x2C28,1059,1}, {0x2C29,1060,1},
    {0x2C2A,1061,1}, {0x2C2B,1062,1}, {0x2C2C,1063,1}, {0x2C2D,1064,1}, {0x2C2E,1065,1},
    {0x2C60,1066,1}, {0x2C62,1067,1}, {0x2C63,1068,1}, {0x2C64,1069,1}, {0x2C67,1070,1},
    {0x2C69,1071,1}, {0x2C6B,1072,1}, {0x2C6D,1073,1}, {0x2C6E,1074,1}, {0x2C6F,1075,1},
    {0x2C70,1076,1}, {0x2C72,1077,1}, {0x2C75,1078,1}, {0x2C7E,1079,1}, {0x2C7F,1080,1},
    {0x2C80,1081,1}, {0x2C82,1082,1}, {0x2C84,1083,1}, {0x2C86,1084,1}, {0x2C88,1085,1},
    {0x2C8A,1086,1}, {0x2C8C,1087,1}, {0x2C8E,1088,1}, {0x2C90,1089,1}, {0x2C92,1090,1},
    {0x2C94,1091,1}, {0x2C96,1092,1}, {0x2C98,1093,1}, {0x2C9A,1094,1}, {0x2C9C,1095,1},
    {0x2C9E,1096,1}, {0x2CA0,1097,1}, {0x2CA2,1098,1}, {0x2CA4,1099,1}, {0x2CA6,1100,1},
    {0x2CA8,1101,1}, {0x2CAA,1102,1}, {0x2CAC,1103,1}, {0x2CAE,1104,1}, {0x2CB0,1105,1},
    {0x2CB2,1106,1}, {0x2CB4,1107,1}, {0x2CB6,1108,1}, {0x2CB8,1109,1}, {0x2CBA,1110,1},
    {0x2CBC,1111,1}, {0x2CBE,1112,1}, {0x2CC0,1113,1}, {0x2CC2,1114,1}, {0x2CC4,1115,1},
    {0x2CC6,1116,1}, {0x2CC8,1117,1}, {0x2CCA,1118,1}, {0x2CCC,1119,1}, {0x2CCE,1120,1},
    {0x2CD0,1121,1}, {0x2CD2,1122,1}, {0x2CD4,1123,1}, {0x2CD6,1124,1}, {0x2CD8,1125,1},
    {0x2CDA,1126,1}, {0x2CDC,1127,1}, {0x2CDE,1128,1}, {0x2CE0,1129,1}, {0x2CE2,1130,1},
    {0x2CEB,1131,1}, {0x2CED,1132,1}, {0x2CF2,1133,1}, {0xA640,1134,1}, {0xA642,1135,1},
    {0xA644,1136,1}, {0xA646,1137,1}, {0xA648,1138,1}, {0xA64A,1139,1}, {0xA64C,1140,1},
    {0xA64E,1141,1}, {0xA650,1142,1}, {0xA652,1143,1}, {0xA654,1144,1}, {0xA656,1145,1},
    {0xA658,1146,1}, {0xA65A,1147,1}, {0xA65C,1148,1}, {0xA65E,1149,1}, {0xA660,1150,1},
    {0xA662,1151,1}, {0xA664,1152,1}, {0xA666,1153,1}, {0xA668,1154,1}, {0xA66A,1155,1},
    {0xA66C,1156,1}, {0xA680,1157,1}, {0xA682,1158,1}, {0xA684,1159,1}, {0xA686,1160,1},
    {0xA688,1161,1}, {0xA68A,1162,1}, {0xA68C,1163,1}, {0xA68E,1164,1}, {0xA690,1165,1},
    {0xA692,1166,1}, {0xA694,1167,1}, {0xA696,1168,1}, {0xA698,1169,1}, {0xA69A,1170,1},
    {0xA722,1171,1}, {0xA724,1172,1}, {0xA726,1173,1}, {0xA728,1174,1}, {0xA72A,1175,1},
    {0xA72C,1176,1}, {0xA72E,1177,1}, {0xA732,1178,1}, {0xA734,1179,1}, {0xA736,1180,1},
    {0xA738,1181,1}, {0xA73A,1182,1}, {0xA73C,1183,1}, {0xA73E,1184,1}, {0xA740,1185,1},
    {0xA742,1186,1}, {0xA744,1187,1}, {0xA746,1188,1}, {0xA748,1189,1}, {0xA74A,1190,1},
    {0xA74C,1191,1}, {0xA74E,1192,1}, {0xA750,1193,1}, {0xA752,1194,1}, {0xA754,1195,1},
    {0xA756,1196,1}, {0xA758,1197,1}, {0xA75A,1198,1}, {0xA75C,1199,1}, {0xA75E,1200,1},
    {0xA760,1201,1}, {0xA762,1202,1}, {0xA764,1203,1}, {0xA766,1204,1}, {0xA768,1205,1},
    {0xA76A,1206,1}, {0xA76C,1207,1}, {0xA76E,1208,1}, {0xA779,1209,1}, {0xA77B,1210,1},
    {0xA77D,1211,1}, {0xA77E,1212,1}, {0xA780,1213,1}, {0xA782,1214,1}, {0xA784,1215,1},
    {0xA786,1216,1}, {0xA78B,1217,1}, {0xA78D,1218,1}, {0xA790,1219,1}, {0xA792,1220,1},
    {0xA796,1221,1}, {0xA798,1222,1}, {0xA79A,1223,1}, {0xA79C,1224,1}, {0xA79E,1225,1},
    {0xA7A0,1226,1}, {0xA7A2,1227,1}, {0xA7A4,1228,1}, {0xA7A6,1229,1}, {0xA7A8,1230,1},
    {0xA7AA,1231,1}, {0xA7AB,1232,1}, {0xA7AC,1233,1}, {0xA7AD,1234,1}, {0xA7AE,1235,1},
    {0xA7B0,1236,1}, {0xA7B1,1237,1}, {0xA7B2,1238,1}, {0xA7B3,1239,1}, {0xA7B4,1240,1},
    {0xA7B6,1241,1}, {0xA7B8,1242,1}, {0xA7BA,1243,1}, {0xA7BC,1244,1}, {0xA7BE,1245,1},
    {0xA7C2,1246,1}, {0xA7C4,1247,1}, {0xA7C5,1248,1}, {0xA7C6,1249,1}, {0xA7C7,1250,1},
    {0xA7C9,1251,1}, {0xA7F5,1252,1}, {0xAB70,1253,1}, {0xAB71,1254,1}, {0xAB72,1255,1},
    {0xAB73,1256,1}, {0xAB74,1257,1}, {0xAB75,1258,1}, {0xAB76,1259,1}, {0xAB77,1260,1},
    {0xAB78,1261,1}, {0xAB79,1262,1}, {0xAB7A,1263,1}, {0xAB7B,1264,1}, {0xAB7C,1265,1},
    {0xAB7D,1266,1}, {0xAB7E,1267,1}, {0xAB7F,1268,1}, {0xAB80,1269,1}, {0xAB81,1270,1},
    {0xAB82,1271,1}, {0xAB83,1272,1}, {0xAB84,1273,1}, {0xAB85,1274,1}, {0xAB86,1275,1},
    {0xAB87,1276,1}, {0xAB88,1277,1}, {0xAB89,1278,1}, {0xAB8A,1279,1}, {0xAB8B,1280,1},
    {0xAB8C,1281,1}, {0xAB8D,1282,1}, {0xAB8E,1283,1}, {0xAB8F,1284,1}, {0xAB90,1285,1},
    {0xAB91,1286,1}, {0xAB92,1287,1}, {0xAB93,1288,1}, {0xAB94,1289,1}, {0xAB95,1290,1},
    {0xAB96,1291,1}, {0xAB97,1292,1}, {0xAB98,1293,1}, {0xAB99,1294,1}, {0xAB9A,1295,1},
    {0xAB9B,1296,1}, {0xAB9C,1297,1}, {0xAB9D,1298,1}, {0xAB9E,1299,1}, {0xAB9F,1300,1},
    {0xABA0,1301,1}, {0xABA1,1302,1}, {0xABA2,1303,1}, {0xABA3,1304,1}, {0xABA4,1305,1},
    {0xABA5,1306,1}, {0xABA6,1307,1}, {0xABA7,1308,1}, {0xABA8,1309,1}, {0xABA9,1310,1},
    {0xABAA,1311,1}, {0xABAB,1312,1}, {0xABAC,1313,1}, {0xABAD,1314,1}, {0xABAE,1315,1},
    {0xABAF,1316,1}, {0xABB0,1317,1}, {0xABB1,1318,1}, {0xABB2,1319,1}, {0xABB3,1320,1},
    {0xABB4,1321,1}, {0xABB5,1322,1}, {0xABB6,1323,1}, {0xABB7,1324,1}, {0xABB8,1325,1},
    {0xABB9,1326,1}, {0xABBA,1327,1}, {0xABBB,1328,1}, {0xABBC,1329,1}, {0xABBD,1330,1},
    {0xABBE,1331,1}, {0xABBF,1332,1}, {0xFB00,1333,2}, {0xFB01,1335,2}, {0xFB02,1337,2},
    {0xFB03,1339,3}, {0xFB04,1342,3}, {0xFB05,1345,2}, {0xFB06,1347,2}, {0xFB13,1349,2},
    {0xFB14,1351,2}, {0xFB15,1353,2}, {0xFB16,1355,2}, {0xFB17,1357,2}, {0xFF21,1359,1},
    {0xFF22,1360,1}, {0xFF23,1361,1}, {0xFF24,1362,1}, {0xFF25,1363,1}, {0xFF26,1364,1},
    {0xFF27,1365,1}, {0xFF28,1366,1}, {0xFF29,1367,1}, {0xFF2A,1368,1}, {0xFF2B,1369,1},
    {0xFF2C,1370,1}, {0xFF2D,1371,1}, {0xFF2E,1372,1}, {0xFF2F,1373,1}, {0xFF30,1374,1},
    {0xFF31,1375,1}, {0xFF32,1376,1}, {0xFF33,1377,1}, {0xFF34,1378,1}, {0xFF35,1379,1},
    {0xFF36,1380,1}, {0xFF37,1381,1}, {0xFF38,1382,1}, {0xFF39,1383,1}, {0xFF3A,1384,1},
    {0x10400,1385,1}, {0x10401,1386,1}, {0x10402,1387,1}, {0x10403,1388,1}, {0x10404,1389,1},
    {0x10405,1390,1}, {0x10406,1391,1}, {0x10407,1392,1}, {0x10408,1393,1}, {0x10409,1394,1},
    {0x1040A,1395,1}, {0x1040B,1396,1}, {0x1040C,1397,1}, {0x1040D,1398,1}, {0x1040E,1399,1},
    {0x1040F,1400,1}, {0x10410,1401,1}, {0x10411,1402,1}, {0x10412,1403,1}, {0x10413,1404,1},
    {0x10414,1405,1}, {0x10415,1406,1}, {0x10416,1407,1}, {0x10417,1408,1}, {0x10418,1409,1},
    {0x10419,1410,1}, {0x1041A,1411,1}, {0x1041B,1412,1}, {0x1041C,1413,1}, {0x1041D,1414,1},
    {0x1041E,1415,1}, {0x1041F,1416,1}, {0x10420,1417,1}, {0x10421,1418,1}, {0x10422,1419,1},
    {0x10423,1420,1}, {0x10424,1421,1}, {0x10425,1422,1}, {0x10426,1423,1}, {0x10427,1424,1},
    {0x104B0,1425,1}, {0x104B1,1426,1}, {0x104B2,1427,1}, {0x104B3,1428,1}, {0x104B4,1429,1},
    {0x104B5,1430,1}, {0x104B6,1431,1}, {0x104B7,1432,1}, {0x104B8,1433,1}, {0x104B9,1434,1},
    {0x104BA,1435,1}, {0x104BB,1436,1}, {0x104BC,1437,1}, {0x104BD,1438,1}, {0x104BE,1439,1},
    {0x104BF,1440,1}, {0x104C0,1441,1}, {0x104C1,1442,1}, {0x104C2,1443,1}, {0x104C3,1444,1},
    {0x104C4,1445,1}, {0x104C5,1446,1}, {0x104C6,1447,1}, {0x104C7,1448,1}, {0x104C8,1449,1},
    {0x104C9,1450,1}, {0x104CA,1451,1}, {0x104CB,1452,1}, {0x104CC,1453,1}, {0x104CD,1454,1},
    {0x104CE,1455,1}, {0x104CF,1456,1}, {0x104D0,1457,1}, {0x104D1,1458,1}, {0x104D2,1459,1},
    {0x104D3,1460,1}, {0x10C80,1461,1}, {0x10C81,1462,1}, {0x10C82,1463,1}, {0x10C83,1464,1},
    {0x10C84,1465,1}, {0x10C85,1466,1}, {0x10C86,1467,1}, {0x10C87,1468,1}, {0x10C88,1469,1},
    {0x10C89,1470,1}, {0x10C8A,1471,1}, {0x10C8B,1472,1}, {0x10C8C,1473,1}, {0x10C8D,1474,1},
    {0x10C8E,1475,1}, {0x10C8F,1476,1}, {0x10C90,1477,1}, {0x10C91,1478,1}, {0x10C92,1479,1},
    {0x10C93,1480,1}, {0x10C94,1481,1}, {0x10C95,1482,1}, {0x10C96,1483,1}, {0x10C97,1484,1},
    {0x10C98,1485,1}, {0x10C99,1486,1}, {0x10C9A,1487,1}, {0x10C9B,1488,1}, {0x10C9C,1489,1},
    {0x10C9D,1490,1}, {0x10C9E,1491,1}, {0x10C9F,1492,1}, {0x10CA0,1493,1}, {0x10CA1,1494,1},
    {0x10CA2,1495,1}, {0x10CA3,1496,1}, {0x10CA4,1497,1}, {0x10CA5,1498,1}, {0x10CA6,1499,1},
    {0x10CA7,1500,1}, {0x10CA8,1501,1}, {0x10CA9,1502,1}, {0x10CAA,1503,1}, {0x10CAB,1504,1},
    {0x10CAC,1505,1}, {0x10CAD,1506,1}, {0x10CAE,1507,1}, {0x10CAF,1508,1}, {0x10CB0,1509,1},
    {0x10CB1,1510,1}, {0x10CB2,1511,1}, {0x118A0,1512,1}, {0x118A1,1513,1}, {0x118A2,1514,1},
    {0x118A3,1515,1}, {0x118A4,1516,1}, {0x118A5,1517,1}, {0x118A6,1518,1}, {0x118A7,1519,1},
    {0x118A8,1520,1}, {0x118A9,1521,1}, {0x118AA,1522,1}, {0x118AB,1523,1}, {0x118AC,1524,1},
    {0x118AD,1525,1}, {0x118AE,1526,1}, {0x118AF,1527,1}, {0x118B0,1528,1}, {0x118B1,1529,1},
    {0x118B2,1530,1}, {0x118B3,1531,1}, {0x118B4,1532,1}, {0x118B5,1533,1}, {0x118B6,1534,1},
    {0x118B7,1535,1}, {0x118B8,1536,1}, {0x118B9,1537,1}, {0x118BA,1538,1}, {0x118BB,1539,1},
    {0x118BC,1540,1}, {0x118BD,1541,1}, {0x118BE,1542,1}, {0x118BF,1543,1}, {0x16E40,1544,1},
    {0x16E41,1545,1}, {0x16E42,1546,1}, {0x16E43,1547,1}, {0x16E44,1548,1}, {0x16E45,1549,1},
    {0x16E46,1550,1}, {0x16E47,1551,1}, {0x16E48,1552,1}, {0x16E49,1553,1}, {0x16E4A,1554,1},
    {0x16E4B,1555,1}, {0x16E4C,1556,1}, {0x16E4D,1557,1}, {0x16E4E,1558,1}, {0x16E4F,1559,1},
    {0x16E50,1560,1}, {0x16E51,1561,1}, {0x16E52,1562,1}, {0x16E53,1563,1}, {0x16E54,1564,1},
    {0x16E55,1565,1}, {0x16E56,1566,1}, {0x16E57,1567,1}, {0x16E58,1568,1}, {0x16E59,1569,1},
    {0x16E5A,1570,1}, {0x16E5B,1571,1}, {0x16E5C,1572,1}, {0x16E5D,1573,1}, {0x16E5E,1574,1},
    {0x16E5F,1575,1}, {0x1E900,1576,1}, {0x1E901,1577,1}, {0x1E902,1578,1}, {0x1E903,1579,1},
    {0x1E904,1580,1}, {0x1E905,1581,1}, {0x1E906,1582,1}, {0x1E907,1583,1}, {0x1E908,1584,1},
    {0x1E909,1585,1}, {0x1E90A,1586,1}, {0x1E90B,1587,1}, {0x1E90C,1588,1}, {0x1E90D,1589,1},
    {0x1E90E,1590,1}, {0x1E90F,1591,1}, {0x1E910,1592,1}, {0x1E911,1593,1}, {0x1E912,1594,1},
    {0x1E913,1595,1}, {0x1E914,1596,1}, {0x1E915,1597,1}, {0x1E916,1598,1}, {0x1E917,1599,1},
    {0x1E918,1600,1}, {0x1E919,1601,1}, {0x1E91A,1602,1}, {0x1E91B,1603,1}, {0x1E91C,1604,1},
    {0x1E91D,1605,1}, {0x1E91E,1606,1}, {0x1E91F,1607,1}, {0x1E920,1608,1}, {0x1E921,1609,1},
};

inline constexpr std::size_t kFoldDataCount = 1610;
inline constexpr char32_t kFoldData[] = {
    0x61, 0x62, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6A,
    0x6B, 0x6C, 0x6D, 0x6E, 0x6F, 0x70, 0x71, 0x72, 0x73, 0x74,
    0x75, 0x76, 0x77, 0x78, 0x79, 0x7A, 0x3BC, 0xE0, 0xE1, 0xE2,
    0xE3, 0xE4, 0xE5, 0xE6, 0xE7, 0xE8, 0xE9, 0xEA, 0xEB, 0xEC,
    0xED, 0xEE, 0xEF, 0xF0, 0xF1, 0xF2, 0xF3, 0xF4, 0xF5, 0xF6,
    0xF8, 0xF9, 0xFA, 0xFB, 0xFC, 0xFD, 0xFE, 0x73, 0x73, 0x101,
    0x103, 0x105, 0x107, 0x109, 0x10B, 0x10D, 0x10F, 0x111, 0x113, 0x115,
    0x117, 0x119, 0x11B, 0x11D, 0x11F, 0x121, 0x123, 0x125, 0x127, 0x129,
    0x12B, 0x12D, 0x12F, 0x69, 0x307, 0x133, 0x135, 0x137, 0x13A, 0x13C,
    0x13E, 0x140, 0x142, 0x144, 0x146, 0x148, 0x2BC, 0x6E, 0x14B, 0x14D,
    0x14F, 0x151, 0x153, 0x155, 0x157, 0x159, 0x15B, 0x15D, 0x15F, 0x161,
    0x163, 0x165, 0x167, 0x169, 0x16B, 0x16D, 0x16F, 0x171, 0x173, 0x175,
    0x177, 0xFF, 0x17A, 0x17C, 0x17E, 0x73, 0x253, 0x183, 0x185, 0x254,
    0x188, 0x256, 0x257, 0x18C, 0x1DD, 0x259, 0x25B, 0x192, 0x260, 0x263,
    0x269, 0x268, 0x199, 0x26F, 0x272, 0x275, 0x1A1, 0x1A3, 0x1A5, 0x280,
    0x1A8, 0x283, 0x1AD, 0x288, 0x1B0, 0x28A, 0x28B, 0x1B4, 0x1B6, 0x292,
    0x1B9, 0x1BD, 0x1C6, 0x1C6, 0x1C9, 0x1C9, 0x1CC, 0x1CC, 0x1CE, 0x1D0,
    0x1D2, 0x1D4, 0x1D6, 0x1D8, 0x1DA, 0x1DC, 0x1DF, 0x1E1, 0x1E3, 0x1E5,
    0x1E7, 0x1E9, 0x1EB, 0x1ED, 0x1EF, 0x6A, 0x30C, 0x1F3, 0x1F3, 0x1F5,
    0x195, 0x1BF, 0x1F9, 0x1FB, 0x1FD, 0x1FF, 0x201, 0x203, 0x205, 0x207,
    0x209, 0x20B, 0x20D, 0x20F, 0x211, 0x213, 0x215, 0x217, 0x219, 0x21B,
    0x21D, 0x21F, 0x19E, 0x223, 0x225, 0x227, 0x229, 0x22B, 0x22D, 0x22F,
    0x231, 0x233, 0x2C65, 0x23C, 0x19A, 0x2C66, 0x242, 0x180, 0x289, 0x28C,
    0x247, 0x249, 0x24B, 0x24D, 0x24F, 0x3B9, 0x371, 0x373, 0x377, 0x3F3,
    0x3AC, 0x3AD, 0x3AE, 0x3AF, 0x3CC, 0x3CD, 0x3CE, 0x3B9, 0x308, 0x301,
    0x3B1, 0x3B2, 0x3B3, 0x3B4, 0x3B5, 0x3B6, 0x3B7, 0x3B8, 0x3B9, 0x3BA,
    0x3BB, 0x3BC, 0x3BD, 0x3BE, 0x3BF, 0x3C0, 0x3C1, 0x3C3, 0x3C4, 0x3C5,
    0x3C6, 0x3C7, 0x3C8, 0x3C9, 0x3CA, 0x3CB, 0x3C5, 0x308, 0x301, 0x3C3,
    0x3D7, 0x3B2, 0x3B8, 0x3C6, 0x3C0, 0x3D9, 0x3DB, 0x3DD, 0x3DF, 0x3E1,
    0x3E3, 0x3E5, 0x3E7, 0x3E9, 0x3EB, 0x3ED, 0x3EF, 0x3BA, 0x3C1, 0x3B8,
    0x3B5, 0x3F8, 0x3F2, 0x3FB, 0x37B, 0x37C, 0x37D, 0x450, 0x451, 0x452,
    0x453, 0x454, 0x455, 0x456, 0x457, 0x458, 0x459, 0x45A, 0x45B, 0x45C,
    0x45D, 0x45E, 0x45F, 0x430, 0x431, 0x432, 0x433, 0x434, 0x435, 0x436,
    0x437, 0x438, 0x439, 0x43A, 0x43B, 0x43C, 0x43D, 0x43E, 0x43F, 0x440,
    0x441, 0x442, 0x443, 0x444, 0x445, 0x446, 0x447, 0x448, 0x449, 0x44A,
    0x44B, 0x44C, 0x44D, 0x44E, 0x44F, 0x461, 0x463, 0x465, 0x467, 0x469,
    0x46B, 0x46D, 0x46F, 0x471, 0x473, 0x475, 0x477, 0x479, 0x47B, 0x47D,
    0x47F, 0x481, 0x48B, 0x48D, 0x48F, 0x491, 0x493, 0x495, 0x497, 0x499,
    0x49B, 0x49D, 0x49F, 0x4A1, 0x4A3, 0x4A5, 0x4A7, 0x4A9, 0x4AB, 0x4AD,
    0x4AF, 0x4B1, 0x4B3, 0x4B5, 0x4B7, 0x4B9, 0x4BB, 0x4BD, 0x4BF, 0x4CF,
    0x4C2, 0x4C4, 0x4C6, 0x4C8, 0x4CA, 0x4CC, 0x4CE, 0x4D1, 0x4D3, 0x4D5,
    0x4D7, 0x4D9, 0x4DB, 0x4DD, 0x4DF, 0x4E1, 0x4E3, 0x4E5, 0x4E7, 0x4E9,
    0x4EB, 0x4ED, 0x4EF, 0x4F1, 0x4F3, 0x4F5, 0x4F7, 0x4F9, 0x4FB, 0x4FD,
    0x4FF, 0x501, 0x503, 0x505, 0x507, 0x509, 0x50B, 0x50D, 0x50F, 0x511,
    0x513, 0x515, 0x517, 0x519, 0x51B, 0x51D, 0x51F, 0x521, 0x523, 0x525,
    0x527, 0x529, 0x52B, 0x52D, 0x52F, 0x561, 0x562, 0x563, 0x564, 0x565,
    0x566, 0x567, 0x568, 0x569, 0x56A, 0x56B, 0x56C, 0x56D, 0x56E, 0x56F,
    0x570, 0x571, 0x572, 0x573, 0x574, 0x575, 0x576, 0x577, 0x578, 0x579,
    0x57A, 0x57B, 0x57C, 0x57D, 0x57E, 0x57F, 0x580, 0x581, 0x582, 0x583,
    0x584, 0x585, 0x586, 0x565, 0x582, 0x2D00, 0x2D01, 0x2D02, 0x2D03, 0x2D04,
    0x2D05, 0x2D06, 0x2D07, 0x2D08, 0x2D09, 0x2D0A, 0x2D0B, 0x2D0C, 0x2D0D, 0x2D0E,
    0x2D0F, 0x2D10, 0x2D11, 0x2D12, 0x2D13, 0x2D14, 0x2D15, 0x2D16, 0x2D17, 0x2D18,
    0x2D19, 0x2D1A, 0x2D1B, 0x2D1C, 0x2D1D, 0x2D1E, 0x2D1F, 0x2D20, 0x2D21, 0x2D22,
    0x2D23, 0x2D24, 0x2D25, 0x2D27, 0x2D2D, 0x13F0, 0x13F1, 0x13F2, 0x13F3, 0x13F4,
    0x13F5, 0x432, 0x434, 0x43E, 0x441, 0x442, 0x442, 0x44A, 0x463, 0xA64B,
    0x10D0, 0x10D1, 0x10D2, 0x10D3, 0x10D4, 0x10D5, 0x10D6, 0x10D7, 0x10D8, 0x10D9,
    0x10DA, 0x10DB, 0x10DC, 0x10DD, 0x10DE, 0x10DF, 0x10E0, 0x10E1, 0x10E2, 0x10E3,
    0x10E4, 0x10E5, 0x10E6, 0x10E7, 0x10E8, 0x10E9, 0x10EA, 0x10EB, 0x10EC, 0x10ED,
    0x10EE, 0x10EF, 0x10F0, 0x10F1, 0x10F2, 0x10F3, 0x10F4, 0x10F5, 0x10F6, 0x10F7,
    0x10F8, 0x10F9, 0x10FA, 0x10FD, 0x10FE, 0x10FF, 0x1E01, 0x1E03, 0x1E05, 0x1E07,
    0x1E09, 0x1E0B, 0x1E0D, 0x1E0F, 0x1E11, 0x1E13, 0x1E15, 0x1E17, 0x1E19, 0x1E1B,
    0x1E1D, 0x1E1F, 0x1E21, 0x1E23, 0x1E25, 0x1E27, 0x1E29, 0x1E2B, 0x1E2D, 0x1E2F,
    0x1E31, 0x1E33, 0x1E35, 0x1E37, 0x1E39, 0x1E3B, 0x1E3D, 0x1E3F, 0x1E41, 0x1E43,
    0x1E45, 0x1E47, 0x1E49, 0x1E4B, 0x1E4D, 0x1E4F, 0x1E51, 0x1E53, 0x1E55, 0x1E57,
    0x1E59, 0x1E5B, 0x1E5D, 0x1E5F, 0x1E61, 0x1E63, 0x1E65, 0x1E67, 0x1E69, 0x1E6B,
    0x1E6D, 0x1E6F, 0x1E71, 0x1E73, 0x1E75, 0x1E77, 0x1E79, 0x1E7B, 0x1E7D, 0x1E7F,
    0x1E81, 0x1E83, 0x1E85, 0x1E87, 0x1E89, 0x1E8B, 0x1E8D, 0x1E8F, 0x1E91, 0x1E93,
    0x1E95, 0x68, 0x331, 0x74, 0x308, 0x77, 0x30A, 0x79, 0x30A, 0x61,
    0x2BE, 0x1E61, 0x73, 0x73, 0x1EA1, 0x1EA3, 0x1EA5, 0x1EA7, 0x1EA9, 0x1EAB,
    0x1EAD, 0x1EAF, 0x1EB1, 0x1EB3, 0x1EB5, 0x1EB7, 0x1EB9, 0x1EBB, 0x1EBD, 0x1EBF,
    0x1EC1, 0x1EC3, 0x1EC5, 0x1EC7, 0x1EC9, 0x1ECB, 0x1ECD, 0x1ECF, 0x1ED1, 0x1ED3,
    0x1ED5, 0x1ED7, 0x1ED9, 0x1EDB, 0x1EDD, 0x1EDF, 0x1EE1, 0x1EE3, 0x1EE5, 0x1EE7,
    0x1EE9, 0x1EEB, 0x1EED, 0x1EEF, 0x1EF1, 0x1EF3, 0x1EF5, 0x1EF7, 0x1EF9, 0x1EFB,
    0x1EFD, 0x1EFF, 0x1F00, 0x1F01, 0x1F02, 0x1F03, 0x1F04, 0x1F05, 0x1F06, 0x1F07,
    0x1F10, 0x1F11, 0x1F12, 0x1F13, 0x1F14, 0x1F15, 0x1F20, 0x1F21, 0x1F22, 0x1F23,
    0x1F24, 0x1F25, 0x1F26, 0x1F27, 0x1F30, 0x1F31, 0x1F32, 0x1F33, 0x1F34, 0x1F35,
    0x1F36, 0x1F37, 0x1F40, 0x1F41, 0x1F42, 0x1F43, 0x1F44, 0x1F45, 0x3C5, 0x313,
    0x3C5, 0x313, 0x300, 0x3C5, 0x313, 0x301, 0x3C5, 0x313, 0x342, 0x1F51,
    0x1F53, 0x1F55, 0x1F57, 0x1F60, 0x1F61, 0x1F62, 0x1F63, 0x1F64, 0x1F65, 0x1F66,
    0x1F67, 0x1F00, 0x3B9, 0x1F01, 0x3B9, 0x1F02, 0x3B9, 0x1F03, 0x3B9, 0x1F04,
    0x3B9, 0x1F05, 0x3B9, 0x1F06, 0x3B9, 0x1F07, 0x3B9, 0x1F00, 0x3B9, 0x1F01,
    0x3B9, 0x1F02, 0x3B9, 0x1F03, 0x3B9, 0x1F04, 0x3B9, 0x1F05, 0x3B9, 0x1F06,
    0x3B9, 0x1F07, 0x3B9, 0x1F20, 0x3B9, 0x1F21, 0x3B9, 0x1F22, 0x3B9, 0x1F23,
    0x3B9, 0x1F24, 0x3B9, 0x1F25, 0x3B9, 0x1F26, 0x3B9, 0x1F27, 0x3B9, 0x1F20,
    0x3B9, 0x1F21, 0x3B9, 0x1F22, 0x3B9, 0x1F23, 0x3B9, 0x1F24, 0x3B9, 0x1F25,
    0x3B9, 0x1F26, 0x3B9, 0x1F27, 0x3B9, 0x1F60, 0x3B9, 0x1F61, 0x3B9, 0x1F62,
    0x3B9, 0x1F63, 0x3B9, 0x1F64, 0x3B9, 0x1F65, 0x3B9, 0x1F66, 0x3B9, 0x1F67,
    0x3B9, 0x1F60, 0x3B9, 0x1F61, 0x3B9, 0x1F62, 0x3B9, 0x1F63, 0x3B9, 0x1F64,
    0x3B9, 0x1F65, 0x3B9, 0x1F66, 0x3B9, 0x1F67, 0x3B9, 0x1F70, 0x3B9, 0x3B1,
    0x3B9, 0x3AC, 0x3B9, 0x3B1, 0x342, 0x3B1, 0x342, 0x3B9, 0x1FB0, 0x1FB1,
    0x1F70, 0x1F71, 0x3B1, 0x3B9, 0x3B9, 0x1F74, 0x3B9, 0x3B7, 0x3B9, 0x3AE,
    0x3B9, 0x3B7, 0x342, 0x3B7, 0x342, 0x3B9, 0x1F72, 0x1F73, 0x1F74, 0x1F75,
    0x3B7, 0x3B9, 0x3B9, 0x308, 0x300, 0x3B9, 0x308, 0x301, 0x3B9, 0x342,
    0x3B9, 0x308, 0x342, 0x1FD0, 0x1FD1, 0x1F76, 0x1F77, 0x3C5, 0x308, 0x300,
    0x3C5, 0x308, 0x301, 0x3C1, 0x313, 0x3C5, 0x342, 0x3C5, 0x308, 0x342,
    0x1FE0, 0x1FE1, 0x1F7A, 0x1F7B, 0x1FE5, 0x1F7C, 0x3B9, 0x3C9, 0x3B9, 0x3CE,
    0x3B9, 0x3C9, 0x342, 0x3C9, 0x342, 0x3B9, 0x1F78, 0x1F79, 0x1F7C, 0x1F7D,
    0x3C9, 0x3B9, 0x3C9, 0x6B, 0xE5, 0x214E, 0x2170, 0x2171, 0x2172, 0x2173,
    0x2174, 0x2175, 0x2176, 0x2177, 0x2178, 0x2179, 0x217A, 0x217B, 0x217C, 0x217D,
    0x217E, 0x217F, 0x2184, 0x24D0, 0x24D1, 0x24D2, 0x24D3, 0x24D4, 0x24D5, 0x24D6,
    0x24D7, 0x24D8, 0x24D9, 0x24DA, 0x24DB, 0x24DC, 0x24DD, 0x24DE, 0x24DF, 0x24E0,
    0x24E1, 0x24E2, 0x24E3, 0x24E4, 0x24E5, 0x24E6, 0x24E7, 0x24E8, 0x24E9, 0x2C30,
    0x2C31, 0x2C32, 0x2C33, 0x2C34, 0x2C35, 0x2C36, 0x2C37, 0x2C38, 0x2C39, 0x2C3A,
    0x2C3B, 0x2C3C, 0x2C3D, 0x2C3E, 0x2C3F, 0x2C40, 0x2C41, 0x2C42, 0x2C43, 0x2C44,
    0x2C45, 0x2C46, 0x2C47, 0x2C48, 0x2C49, 0x2C4A, 0x2C4B, 0x2C4C, 0x2C4D, 0x2C4E,
    0x2C4F, 0x2C50, 0x2C51, 0x2C52, 0x2C53, 0x2C54, 0x2C55, 0x2C56, 0x2C57, 0x2C58,
    0x2C59, 0x2C5A, 0x2C5B, 0x2C5C, 0x2C5D, 0x2C5E, 0x2C61, 0x26B, 0x1D7D, 0x27D,
    0x2C68, 0x2C6A, 0x2C6C, 0x251, 0x271, 0x250, 0x252, 0x2C73, 0x2C76, 0x23F,
    0x240, 0x2C81, 0x2C83, 0x2C85, 0x2C87, 0x2C89, 0x2C8B, 0x2C8D, 0x2C8F, 0x2C91,
    0x2C93, 0x2C95, 0x2C97, 0x2C99, 0x2C9B, 0x2C9D, 0x2C9F, 0x2CA1, 0x2CA3, 0x2CA5,
    0x2CA7, 0x2CA9, 0x2CAB, 0x2CAD, 0x2CAF, 0x2CB1, 0x2CB3, 0x2CB5, 0x2CB7, 0x2CB9,
    0x2CBB, 0x2CBD, 0x2CBF, 0x2CC1, 0x2CC3, 0x2CC5, 0x2CC7, 0x2CC9, 0x2CCB, 0x2CCD,
    0x2CCF, 0x2CD1, 0x2CD3, 0x2CD5, 0x2CD7, 0x2CD9, 0x2CDB, 0x2CDD, 0x2CDF, 0x2CE1,
    0x2CE3, 0x2CEC, 0x2CEE, 0x2CF3, 0xA641, 0xA643, 0xA645, 0xA647, 0xA649, 0xA64B,
    0xA64D, 0xA64F, 0xA651, 0xA653, 0xA655, 0xA657, 0xA659, 0xA65B, 0xA65D, 0xA65F,
    0xA661, 0xA663, 0xA665, 0xA667, 0xA669, 0xA66B, 0xA66D, 0xA681, 0xA683, 0xA685,
    0xA687, 0xA689, 0xA68B, 0xA68D, 0xA68F, 0xA691, 0xA693, 0xA695, 0xA697, 0xA699,
    0xA69B, 0xA723, 0xA725, 0xA727, 0xA729, 0xA72B, 0xA72D, 0xA72F, 0xA733, 0xA735,
    0xA737, 0xA739, 0xA73B, 0xA73D, 0xA73F, 0xA741, 0xA743, 0xA745, 0xA747, 0xA749,
    0xA74B, 0xA74D, 0xA74F, 0xA751, 0xA753, 0xA755, 0xA757, 0xA759, 0xA75B, 0xA75D,
    0xA75F, 0xA761, 0xA763, 0xA765, 0xA767, 0xA769, 0xA76B, 0xA76D, 0xA76F, 0xA77A,
    0xA77C, 0x1D79, 0xA77F, 0xA781, 0xA783, 0xA785, 0xA787, 0xA78C, 0x265, 0xA791,
    0xA793, 0xA797, 0xA799, 0xA79B, 0xA79D, 0xA79F, 0xA7A1, 0xA7A3, 0xA7A5, 0xA7A7,
    0xA7A9, 0x266, 0x25C, 0x261, 0x26C, 0x26A, 0x29E, 0x287, 0x29D, 0xAB53,
    0xA7B5, 0xA7B7, 0xA7B9, 0xA7BB, 0xA7BD, 0xA7BF, 0xA7C3, 0xA794, 0x282, 0x1D8E,
    0xA7C8, 0xA7CA, 0xA7F6, 0x13A0, 0x13A1, 0x13A2, 0x13A3, 0x13A4, 0x13A5, 0x13A6,
    0x13A7, 0x13A8, 0x13A9, 0x13AA, 0x13AB, 0x13AC, 0x13AD, 0x13AE, 0x13AF, 0x13B0,
    0x13B1, 0x13B2, 0x13B3, 0x13B4, 0x13B5, 0x13B6, 0x13B7, 0x13B8, 0x13B9, 0x13BA,
    0x13BB, 0x13BC, 0x13BD, 0x13BE, 0x13BF, 0x13C0, 0x13C1, 0x13C2, 0x13C3, 0x13C4,
    0x13C5, 0x13C6, 0x13C7, 0x13C8, 0x13C9, 0x13CA, 0x13CB, 0x13CC, 0x13CD, 0x13CE,
    0x13CF, 0x13D0, 0x13D1, 0x13D2, 0x13D3, 0x13D4, 0x13D5, 0x13D6, 0x13D7, 0x13D8,
    0x13D9, 0x13DA, 0x13DB, 0x13DC, 0x13DD, 0x13DE, 0x13DF, 0x13E0, 0x13E1, 0x13E2,
    0x13E3, 0x13E4, 0x13E5, 0x13E6, 0x13E7, 0x13E8, 0x13E9, 0x13EA, 0x13EB, 0x13EC,
    0x13ED, 0x13EE, 0x13EF, 0x66, 0x66, 0x66, 0x69, 0x66, 0x6C, 0x66,
    0x66, 0x69, 0x66, 0x66, 0x6C, 0x73, 0x74, 0x73, 0x74, 0x574,
    0x576, 0x574, 0x565, 0x574, 0x56B, 0x57E, 0x576, 0x574, 0x56D, 0xFF41,
    0xFF42, 0xFF43, 0xFF44, 0xFF45, 0xFF46, 0xFF47, 0xFF48, 0xFF49, 0xFF4A, 0xFF4B,
    0xFF4C, 0xFF4D, 0xFF4E, 0xFF4F, 0xFF50, 0xFF51, 0xFF52, 0xFF53, 0xFF54, 0xFF55,
    0xFF56, 0xFF57, 0xFF58, 0xFF59, 0xFF5A, 0x10428, 0x10429, 0x1042A, 0x1042B, 0x1042C,
    0x1042D, 0x1042E, 0x1042F, 0x10430, 0x10431, 0x10432, 0x10433, 0x10434, 0x10435, 0x10436,
    0x10437, 0x10438, 0x10439, 0x1043A, 0x1043B, 0x1043C, 0x1043D, 0x1043E, 0x1043F, 0x10440,
    0x10441, 0x10442, 0x10443, 0x10444, 0x10445, 0x10446, 0x10447, 0x10448, 0x10449, 0x1044A,
    0x1044B, 0x1044C, 0x1044D, 0x1044E, 0x1044F, 0x104D8, 0x104D9, 0x104DA, 0x104DB, 0x104DC,
    0x104DD, 0x104DE, 0x104DF, 0x104E0, 0x104E1, 0x104E2, 0x104E3, 0x104E4, 0x104E5, 0x104E6,
    0x104E7, 0x104E8, 0x104E9, 0x104EA, 0x104EB, 0x104EC, 0x104ED, 0x104EE, 0x104EF, 0x104F0,
    0x104F1, 0x104F2, 0x104F3, 0x104F4, 0x104F5, 0x104F6, 0x104F7, 0x104F8, 0x104F9, 0x104FA,
    0x104FB, 0x10CC0, 0x10CC1, 0x10CC2, 0x10CC3, 0x10CC4, 0x10CC5, 0x10CC6, 0x10CC7, 0x10CC8,
    0x10CC9, 0x10CCA, 0x10CCB, 0x10CCC, 0x10CCD, 0x10CCE, 0x10CCF, 0x10CD0, 0x10CD1, 0x10CD2,
    0x10CD3, 0x10CD4, 0x10CD5, 0x10CD6, 0x10CD7, 0x10CD8, 0x10CD9, 0x10CDA, 0x10CDB, 0x10CDC,
    0x10CDD, 0x10CDE, 0x10CDF, 0x10CE0, 0x10CE1, 0x10CE2, 0x10CE3, 0x10CE4, 0x10CE5, 0x10CE6,
    0x10CE7, 0x10CE8, 0x10CE9, 0x10CEA, 0x10CEB, 0x10CEC, 0x10CED, 0x10CEE, 0x10CEF, 0x10CF0,
    0x10CF1, 0x10CF2, 0x118C0, 0x118C1, 0x118C2, 0x118C3, 0x118C4, 0x118C5, 0x118C6, 0x118C7,
    0x118C8, 0x118C9, 0x118CA, 0x118CB, 0x118CC, 0x118CD, 0x118CE, 0x118CF, 0x118D0, 0x118D1,
    0x118D2, 0x118D3, 0x118D4, 0x118D5, 0x118D6, 0x118D7, 0x118D8, 0x118D9, 0x118DA, 0x118DB,
    0x118DC, 0x118DD, 0x118DE, 0x118DF, 0x16E60, 0x16E61, 0x16E62, 0x16E63, 0x16E64, 0x16E65,
    0x16E66, 0x16E67, 0x16E68, 0x16E69, 0x16E6A, 0x16E6B, 0x16E6C, 0x16E6D, 0x16E6E, 0x16E6F,
    0x16E70, 0x16E71, 0x16E72, 0x16E73, 0x16E74, 0x16E75, 0x16E76, 0x16E77, 0x16E78, 0x16E79,
    0x16E7A, 0x16E7B, 0x16E7C, 0x16E7D, 0x16E7E, 0x16E7F, 0x1E922, 0x1E923, 0x1E924, 0x1E925,
    0x1E926, 0x1E927, 0x1E928, 0x1E929, 0x1E92A, 0x1E92B, 0x1E92C, 0x1E92D, 0x1E92E, 0x1E92F,
    0x1E930, 0x1E931, 0x1E932, 0x1E933, 0x1E934, 0x1E935, 0x1E936, 0x1E937, 0x1E938, 0x1E939,
    0x1E93A, 0x1E93B, 0x1E93C, 0x1E93D, 0x1E93E, 0x1E93F, 0x1E940, 0x1E941, 0x1E942, 0x1E943,
};

} // namespace zipfstat::tables
