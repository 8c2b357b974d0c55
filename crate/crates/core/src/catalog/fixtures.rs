//! Ket lists of known k-uniform states, one digit per party.
//!
//! Each entry is a superposition of product kets with equal amplitudes. The
//! party order follows the level profile, highest level first, so `3^2x2^13`
//! has two qutrits followed by thirteen qubits.

/// A k-uniform state given as its list of kets.
#[derive(Clone, Copy, Debug)]
pub struct KetFixture {
    pub id: &'static str,
    /// `(level, multiplicity)` pairs in party order.
    pub profile: &'static [(u32, usize)],
    /// The uniformity the state is known to have.
    pub uniformity: usize,
    pub kets: &'static [&'static str],
}

pub const FIXTURES: &[KetFixture] = &[
    KetFixture {
        id: "3^1x2^10",
        profile: &[(3, 1), (2, 10)],
        uniformity: 2,
        kets: &[
            "00111111111", "01000000000", "10010111000", "11101000111", "20001011100", "21110100011",
            "20100101110", "21011010001", "00010010111", "01101101000", "10001001011", "11110110100",
            "10000100101", "11111011010", "20100010010", "21011101101", "00110001001", "01001110110",
            "10111000100", "11000111011", "20011100010", "21100011101", "00101110001", "01010001110",
        ],
    },
    KetFixture {
        id: "3^1x2^9",
        profile: &[(3, 1), (2, 9)],
        uniformity: 2,
        kets: &[
            "0011111111", "0100000000", "1001011100", "1110100011", "2000101110", "2111010001",
            "2010010111", "2101101000", "0001001011", "0110110100", "1000100101", "1111011010",
            "1000010010", "1111101101", "2010001001", "2101110110", "0011000100", "0100111011",
            "1011100010", "1100011101", "2001110001", "2110001110", "0010111000", "0101000111",
        ],
    },
    KetFixture {
        id: "3^2x2^13",
        profile: &[(3, 2), (2, 13)],
        uniformity: 2,
        kets: &[
            "010000001001001", "000000010000010", "000001000111100", "010001111011111", "110010011110111", "210010101010100",
            "100010110011100", "110011100101010", "020011111100011", "100100100100001", "220100101010010", "210101010101111",
            "220101011100100", "120101100000111", "020110001101100", "120110110111001", "200111000011010", "200111011010001",
            "201000101101101", "201000110100110", "101001001110011", "121001011111000", "021001110010000", "221010000111011",
            "121010001000110", "211011000000001", "221011110001101", "021100000011111", "111100010010101", "211100111111010",
            "111101101001000", "011110010100000", "001110111001011", "101111011001110", "011111100110110", "001111101110101",
        ],
    },
    KetFixture {
        id: "3^2x2^12",
        profile: &[(3, 2), (2, 12)],
        uniformity: 2,
        kets: &[
            "01000000100100", "00000001000001", "00000100011110", "01000111101111", "11001001111011", "21001010101010",
            "10001011001110", "11001110010101", "02001111110001", "10010010010000", "22010010101001", "21010101010111",
            "22010101110010", "12010110000011", "02011000110110", "12011011011100", "20011100001101", "20011101101000",
            "20100010110110", "20100011010011", "10100100111001", "12100101111100", "02100111001000", "22101000011101",
            "12101000100011", "21101100000000", "22101111000110", "02110000001111", "11110001001010", "21110011111101",
            "11110110100100", "01111001010000", "00111011100101", "10111101100111", "01111110011011", "00111110111010",
        ],
    },
    KetFixture {
        id: "3^3x2^11",
        profile: &[(3, 3), (2, 11)],
        uniformity: 2,
        kets: &[
            "01200000010010", "00000000100000", "00000010001111", "01200011110111", "11100100111101", "21000101010101",
            "10200101100111", "11100111001010", "02100111111000", "10201001001000", "22201001010100", "21001010101011",
            "22201010111001", "12001011000001", "02101100011011", "12001101101110", "20101110000110", "20101110110100",
            "20110001011011", "20110001101001", "10210010011100", "12010010111110", "02110011100100", "22210100001110",
            "12010100010001", "21010110000000", "22210111100011", "02111000000111", "11111000100101", "21011001111110",
            "11111011010010", "01211100101000", "00011101110010", "10211110110011", "01211111001101", "00011111011101",
        ],
    },
    KetFixture {
        id: "3^4x2^10",
        profile: &[(3, 4), (2, 10)],
        uniformity: 2,
        kets: &[
            "01210000001001", "00000000010000", "00000001000111", "01210001111011", "11100010011110", "21020010101010",
            "10220010110011", "11100011100101", "02120011111100", "10220100100100", "22200100101010", "21020101010101",
            "22200101011100", "12010101100000", "02120110001101", "12010110110111", "20110111000011", "20110111011010",
            "20111000101101", "20111000110100", "10221001001110", "12011001011111", "02121001110010", "22201010000111",
            "12011010001000", "21021011000000", "22201011110001", "02121100000011", "11101100010010", "21021100111111",
            "11101101101001", "01211110010100", "00001110111001", "10221111011001", "01211111100110", "00001111101110",
        ],
    },
    KetFixture {
        id: "7^1x2^10",
        profile: &[(7, 1), (2, 10)],
        uniformity: 2,
        kets: &[
            "00000000000", "00000001111", "30001101001", "40001110110", "50010011010", "60010110111",
            "20011111001", "10100110011", "50101010100", "60101011101", "20110100100", "40110101010",
            "30111000011", "10111001100", "31000110100", "21001011010", "11001101110", "11010010001",
            "51010101101", "61011000010", "41011000101", "21100000111", "41100011001", "61100101000",
            "51101100011", "31110011110", "01111110000", "01111111111",
        ],
    },
    KetFixture {
        id: "5^1x2^14",
        profile: &[(5, 1), (2, 14)],
        uniformity: 2,
        kets: &[
            "200000000000000", "400000000001110", "300000000011101", "100010010111000", "000010010111111", "400011101101000",
            "200011101101101", "300011101110110", "000100101110000", "100100101110111", "100101110001000", "000101110001111",
            "300111011000011", "400111011010100", "200111011011011", "401000111000111", "201000111010001", "301000111011010",
            "001001011100001", "101001011100110", "001011100010001", "101011100010110", "201101000100111", "301101000110001",
            "401101000111010", "101110001001001", "001110001001110", "401110110100000", "301110110101110", "201110110111101",
            "110001001011010", "010001001011101", "410001110100011", "210001110110100", "310001110111011", "010010111000010",
            "110010111000101", "210100011101000", "310100011101101", "410100011110110", "310110100000111", "410110100010001",
            "210110100011010", "010111000100010", "110111000100101", "111000100101011", "011000100101100", "211010001100011",
            "311010001110100", "411010001111011", "311011010001000", "411011010001101", "211011010010110", "011100010010011",
            "111100010010100", "311101101000000", "211101101001110", "411101101011101", "111111111111011", "011111111111100",
        ],
    },
    KetFixture {
        id: "5^1x2^13",
        profile: &[(5, 1), (2, 13)],
        uniformity: 2,
        kets: &[
            "20000000000000", "40000000001110", "30000000011101", "10010010111000", "00010010111111", "40011101101000",
            "20011101101101", "30011101110110", "00100101110000", "10100101110111", "10101110001000", "00101110001111",
            "30111011000011", "40111011010100", "20111011011011", "41000111000111", "21000111010001", "31000111011010",
            "01001011100001", "11001011100110", "01011100010001", "11011100010110", "21101000100111", "31101000110001",
            "41101000111010", "11110001001001", "01110001001110", "41110110100000", "31110110101110", "21110110111101",
            "10001001011010", "00001001011101", "40001110100011", "20001110110100", "30001110111011", "00010111000010",
            "10010111000101", "20100011101000", "30100011101101", "40100011110110", "30110100000111", "40110100010001",
            "20110100011010", "00111000100010", "10111000100101", "11000100101011", "01000100101100", "21010001100011",
            "31010001110100", "41010001111011", "31011010001000", "41011010001101", "21011010010110", "01100010010011",
            "11100010010100", "31101101000000", "21101101001110", "41101101011101", "11111111111011", "01111111111100",
        ],
    },
    KetFixture {
        id: "5^1x3^1x2^15",
        profile: &[(5, 1), (3, 1), (2, 15)],
        uniformity: 2,
        kets: &[
            "40000001010100000", "31000001111001011", "42000011011101101", "21000100010001011", "41000100111000101", "31000110001110000",
            "32000110100101001", "12000111101110110", "00001000101110011", "10001001000100000", "20001011010011111", "30001101001000100",
            "30001110011111101", "40001110111010010", "11001111110111110", "01010000010110111", "22010001111110110", "02010010001000101",
            "41010011000010010", "32010011101101110", "42010100000011010", "22010110110011001", "02011000001111010", "00011001110001100",
            "12011010110001000", "21011011100110101", "11011100000100011", "10011100101001111", "20011101101011001", "01011111010000100",
            "12100000000011101", "11100000011011100", "10100011010111011", "20100100100100110", "01100101101011010", "02100101110000111",
            "00100111000010001", "41101000100111100", "22101001001001000", "32101001011010111", "42101010100000110", "01101010101101001",
            "21101010111000010", "22101110000100111", "02101111110111000", "30110000110101010", "20110010011100000", "30110011100010011",
            "11110011101000001", "21110101001111100", "40110101100101101", "00110110011101110", "10110110111010100", "31111000110110101",
            "40111010001011111", "32111100010010000", "12111101011100011", "42111101111110001", "31111111000001110", "41111111011101011",
        ],
    },
    KetFixture {
        id: "5^1x3^1x2^12",
        profile: &[(5, 1), (3, 1), (2, 12)],
        uniformity: 2,
        kets: &[
            "40000001010100", "31000001111001", "42000011011101", "21000100010001", "41000100111000", "31000110001110",
            "32000110100101", "12000111101110", "00001000101110", "10001001000100", "20001011010011", "30001101001000",
            "30001110011111", "40001110111010", "11001111110111", "01010000010110", "22010001111110", "02010010001000",
            "41010011000010", "32010011101101", "42010100000011", "22010110110011", "02011000001111", "00011001110001",
            "12011010110001", "21011011100110", "11011100000100", "10011100101001", "20011101101011", "01011111010000",
            "12100000000011", "11100000011011", "10100011010111", "20100100100100", "01100101101011", "02100101110000",
            "00100111000010", "41101000100111", "22101001001001", "32101001011010", "42101010100000", "01101010101101",
            "21101010111000", "22101110000100", "02101111110111", "30110000110101", "20110010011100", "30110011100010",
            "11110011101000", "21110101001111", "40110101100101", "00110110011101", "10110110111010", "31111000110110",
            "40111010001011", "32111100010010", "12111101011100", "42111101111110", "31111111000001", "41111111011101",
        ],
    },
    KetFixture {
        id: "3^4x2^22",
        profile: &[(3, 4), (2, 22)],
        uniformity: 3,
        kets: &[
            "00010000000000000000000000", "11120000000000000000000000", "22200000000000000000000000", "00011111111111111111111111", "11121111111111111111111111", "22201111111111111111111111",
            "11100000010011000010110111", "22210000010011000010110111", "00020000010011000010110111", "11101111101100111101001000", "22211111101100111101001000", "00021111101100111101001000",
            "12220000011100000101011111", "20000000011100000101011111", "01110000011100000101011111", "12221111100011111010100000", "20001111100011111010100000", "01111111100011111010100000",
            "01020000111000001011110001", "12100000111000001011110001", "20210000111000001011110001", "01021111000111110100001110", "12101111000111110100001110", "20211111000111110100001110",
            "22010001010101011110101110", "00120001010101011110101110", "11200001010101011110101110", "22011110101010100001010001", "00121110101010100001010001", "11201110101010100001010001",
            "11020001101110110010101001", "22100001101110110010101001", "00210001101110110010101001", "11021110010001001101010110", "22101110010001001101010110", "00211110010001001101010110",
            "10120001101111000001001110", "21200001101111000001001110", "02010001101111000001001110", "10121110010000111110110001", "21201110010000111110110001", "02011110010000111110110001",
            "02200001101111011100110001", "10010001101111011100110001", "21120001101111011100110001", "02201110010000100011001110", "10011110010000100011001110", "21121110010000100011001110",
            "21110001110000111101000011", "02220001110000111101000011", "10000001110000111101000011", "21111110001111000010111100", "02221110001111000010111100", "10001110001111000010111100",
            "20020010000011111000111101", "01100010000011111000111101", "12210010000011111000111101", "20021101111100000111000010", "01101101111100000111000010", "12211101111100000111000010",
            "01000010001100111010010010", "12110010001100111010010010", "20220010001100111010010010", "01001101110011000101101101", "12111101110011000101101101", "20221101110011000101101101",
            "02120010011110111101001101", "10200010011110111101001101", "21010010011110111101001101", "02121101100001000010110010", "10201101100001000010110010", "21011101100001000010110010",
            "20100010101001010111101010", "01210010101001010111101010", "12020010101001010111101010", "20101101010110101000010101", "01211101010110101000010101", "12021101010110101000010101",
            "20110010111011100110011100", "01220010111011100110011100", "12000010111011100110011100", "20111101000100011001100011", "01221101000100011001100011", "12001101000100011001100011",
            "02110011000100100101110100", "10220011000100100101110100", "21000011000100100101110100", "02111100111011011010001011", "10221100111011011010001011", "21001100111011011010001011",
            "11010011010111010011000000", "22120011010111010011000000", "00200011010111010011000000", "11011100101000101100111111", "22121100101000101100111111", "00201100101000101100111111",
            "22020011100000101010001111", "00100011100000101010001111", "11210011100000101010001111", "22021100011111010101110000", "00101100011111010101110000", "11211100011111010101110000",
            "21220011110011101101110010", "02000011110011101101110010", "10110011110011101101110010", "21221100001100010010001101", "02001100001100010010001101", "10111100001100010010001101",
            "00010100000101110001111011", "11120100000101110001111011", "22200100000101110001111011", "00011011111010001110000100", "11121011111010001110000100", "22201011111010001110000100",
            "11100100010110101110101010", "22210100010110101110101010", "00020100010110101110101010", "11101011101001010001010101", "22211011101001010001010101", "00021011101001010001010101",
            "12220100100001110100000100", "20000100100001110100000100", "01110100100001110100000100", "12221011011110001011111011", "20001011011110001011111011", "01111011011110001011111011",
            "01020100110010011001101100", "12100100110010011001101100", "20210100110010011001101100", "01021011001101100110010011", "12101011001101100110010011", "20211011001101100110010011",
            "22010100111101111011010100", "00120100111101111011010100", "11200100111101111011010100", "22011011000010000100101011", "00121011000010000100101011", "11201011000010000100101011",
            "11020101001010011110010110", "22100101001010011110010110", "00210101001010011110010110", "11021010110101100001101001", "22101010110101100001101001", "00211010110101100001101001",
            "10120101001010100111100101", "21200101001010100111100101", "02010101001010100111100101", "10121010110101011000011010", "21201010110101011000011010", "02011010110101011000011010",
            "02200101001011101001011010", "10010101001011101001011010", "21120101001011101001011010", "02201010110100010110100101", "10011010110100010110100101", "21121010110100010110100101",
            "21110101110101100110011001", "02220101110101100110011001", "10000101110101100110011001", "21111010001010011001100110", "02221010001010011001100110", "10001010001010011001100110",
            "20020110000111001111000001", "01100110000111001111000001", "12210110000111001111000001", "20021001111000110000111110", "01101001111000110000111110", "12211001111000110000111110",
            "01000110100010010111011011", "12110110100010010111011011", "20220110100010010111011011", "01001001011101101000100100", "12111001011101101000100100", "20221001011101101000100100",
            "02120110101101001100100111", "10200110101101001100100111", "21010110101101001100100111", "02121001010010110011011000", "10201001010010110011011000", "21011001010010110011011000",
            "20100110111110100000100010", "01210110111110100000100010", "12020110111110100000100010", "20101001000001011111011101", "01211001000001011111011101", "12021001000001011111011101",
            "20110111011000010100111000", "01220111011000010100111000", "12000111011000010100111000", "20111000100111101011000111", "01221000100111101011000111", "12001000100111101011000111",
            "02110111011001001000001001", "10220111011001001000001001", "21000111011001001000001001", "02111000100110110111110110", "10221000100110110111110110", "21001000100110110111110110",
            "11010111011001110011100111", "22120111011001110011100111", "00200111011001110011100111", "11011000100110001100011000", "22121000100110001100011000", "00201000100110001100011000",
            "22020111100100001011111100", "00100111100100001011111100", "11210111100100001011111100", "22021000011011110100000011", "00101000011011110100000011", "11211000011011110100000011",
            "21220111110110010000010111", "02000111110110010000010111", "10110111110110010000010111", "21221000001001101111101000", "02001000001001101111101000", "10111000001001101111101000",
        ],
    },
    KetFixture {
        id: "3^5x2^16",
        profile: &[(3, 5), (2, 16)],
        uniformity: 3,
        kets: &[
            "000010000000000000000", "111120000000000000000", "222200000000000000000", "000011111111111111111", "111121111111111111111", "222201111111111111111",
            "111100000010011000010", "222210000010011000010", "000020000010011000010", "111101111101100111101", "222211111101100111101", "000021111101100111101",
            "112220000011100000101", "220000000011100000101", "001110000011100000101", "112221111100011111010", "220001111100011111010", "001111111100011111010",
            "101020000111000001011", "212100000111000001011", "020210000111000001011", "101021111000111110100", "212101111000111110100", "020211111000111110100",
            "022010001010101011110", "100120001010101011110", "211200001010101011110", "022011110101010100001", "100121110101010100001", "211201110101010100001",
            "011020001101110110010", "122100001101110110010", "200210001101110110010", "011021110010001001101", "122101110010001001101", "200211110010001001101",
            "010120001101111000001", "121200001101111000001", "202010001101111000001", "010121110010000111110", "121201110010000111110", "202011110010000111110",
            "002200001101111011100", "110010001101111011100", "221120001101111011100", "002201110010000100011", "110011110010000100011", "221121110010000100011",
            "221110001110000111101", "002220001110000111101", "110000001110000111101", "221111110001111000010", "002221110001111000010", "110001110001111000010",
            "220020010000011111000", "001100010000011111000", "112210010000011111000", "220021101111100000111", "001101101111100000111", "112211101111100000111",
            "201000010001100111010", "012110010001100111010", "120220010001100111010", "201001101110011000101", "012111101110011000101", "120221101110011000101",
            "202120010011110111101", "010200010011110111101", "121010010011110111101", "202121101100001000010", "010201101100001000010", "121011101100001000010",
            "020100010101001010111", "101210010101001010111", "212020010101001010111", "020101101010110101000", "101211101010110101000", "212021101010110101000",
            "120110010111011100110", "201220010111011100110", "012000010111011100110", "120111101000100011001", "201221101000100011001", "012001101000100011001",
            "102110011000100100101", "210220011000100100101", "021000011000100100101", "102111100111011011010", "210221100111011011010", "021001100111011011010",
            "211010011010111010011", "022120011010111010011", "100200011010111010011", "211011100101000101100", "022121100101000101100", "100201100101000101100",
            "122020011100000101010", "200100011100000101010", "011210011100000101010", "122021100011111010101", "200101100011111010101", "011211100011111010101",
            "021220011110011101101", "102000011110011101101", "210110011110011101101", "021221100001100010010", "102001100001100010010", "210111100001100010010",
            "000010100000101110001", "111120100000101110001", "222200100000101110001", "000011011111010001110", "111121011111010001110", "222201011111010001110",
            "111100100010110101110", "222210100010110101110", "000020100010110101110", "111101011101001010001", "222211011101001010001", "000021011101001010001",
            "112220100100001110100", "220000100100001110100", "001110100100001110100", "112221011011110001011", "220001011011110001011", "001111011011110001011",
            "101020100110010011001", "212100100110010011001", "020210100110010011001", "101021011001101100110", "212101011001101100110", "020211011001101100110",
            "022010100111101111011", "100120100111101111011", "211200100111101111011", "022011011000010000100", "100121011000010000100", "211201011000010000100",
            "011020101001010011110", "122100101001010011110", "200210101001010011110", "011021010110101100001", "122101010110101100001", "200211010110101100001",
            "010120101001010100111", "121200101001010100111", "202010101001010100111", "010121010110101011000", "121201010110101011000", "202011010110101011000",
            "002200101001011101001", "110010101001011101001", "221120101001011101001", "002201010110100010110", "110011010110100010110", "221121010110100010110",
            "221110101110101100110", "002220101110101100110", "110000101110101100110", "221111010001010011001", "002221010001010011001", "110001010001010011001",
            "220020110000111001111", "001100110000111001111", "112210110000111001111", "220021001111000110000", "001101001111000110000", "112211001111000110000",
            "201000110100010010111", "012110110100010010111", "120220110100010010111", "201001001011101101000", "012111001011101101000", "120221001011101101000",
            "202120110101101001100", "010200110101101001100", "121010110101101001100", "202121001010010110011", "010201001010010110011", "121011001010010110011",
            "020100110111110100000", "101210110111110100000", "212020110111110100000", "020101001000001011111", "101211001000001011111", "212021001000001011111",
            "120110111011000010100", "201220111011000010100", "012000111011000010100", "120111000100111101011", "201221000100111101011", "012001000100111101011",
            "102110111011001001000", "210220111011001001000", "021000111011001001000", "102111000100110110111", "210221000100110110111", "021001000100110110111",
            "211010111011001110011", "022120111011001110011", "100200111011001110011", "211011000100110001100", "022121000100110001100", "100201000100110001100",
            "122020111100100001011", "200100111100100001011", "011210111100100001011", "122021000011011110100", "200101000011011110100", "011211000011011110100",
            "021220111110110010000", "102000111110110010000", "210110111110110010000", "021221000001001101111", "102001000001001101111", "210111000001001101111",
        ],
    },
    KetFixture {
        id: "3^4x2^16",
        profile: &[(3, 4), (2, 16)],
        uniformity: 3,
        kets: &[
            "00010000000000000000", "11120000000000000000", "22200000000000000000", "00011111111111111111", "11121111111111111111", "22201111111111111111",
            "11100000010011000010", "22210000010011000010", "00020000010011000010", "11101111101100111101", "22211111101100111101", "00021111101100111101",
            "12220000011100000101", "20000000011100000101", "01110000011100000101", "12221111100011111010", "20001111100011111010", "01111111100011111010",
            "01020000111000001011", "12100000111000001011", "20210000111000001011", "01021111000111110100", "12101111000111110100", "20211111000111110100",
            "22010001010101011110", "00120001010101011110", "11200001010101011110", "22011110101010100001", "00121110101010100001", "11201110101010100001",
            "11020001101110110010", "22100001101110110010", "00210001101110110010", "11021110010001001101", "22101110010001001101", "00211110010001001101",
            "10120001101111000001", "21200001101111000001", "02010001101111000001", "10121110010000111110", "21201110010000111110", "02011110010000111110",
            "02200001101111011100", "10010001101111011100", "21120001101111011100", "02201110010000100011", "10011110010000100011", "21121110010000100011",
            "21110001110000111101", "02220001110000111101", "10000001110000111101", "21111110001111000010", "02221110001111000010", "10001110001111000010",
            "20020010000011111000", "01100010000011111000", "12210010000011111000", "20021101111100000111", "01101101111100000111", "12211101111100000111",
            "01000010001100111010", "12110010001100111010", "20220010001100111010", "01001101110011000101", "12111101110011000101", "20221101110011000101",
            "02120010011110111101", "10200010011110111101", "21010010011110111101", "02121101100001000010", "10201101100001000010", "21011101100001000010",
            "20100010101001010111", "01210010101001010111", "12020010101001010111", "20101101010110101000", "01211101010110101000", "12021101010110101000",
            "20110010111011100110", "01220010111011100110", "12000010111011100110", "20111101000100011001", "01221101000100011001", "12001101000100011001",
            "02110011000100100101", "10220011000100100101", "21000011000100100101", "02111100111011011010", "10221100111011011010", "21001100111011011010",
            "11010011010111010011", "22120011010111010011", "00200011010111010011", "11011100101000101100", "22121100101000101100", "00201100101000101100",
            "22020011100000101010", "00100011100000101010", "11210011100000101010", "22021100011111010101", "00101100011111010101", "11211100011111010101",
            "21220011110011101101", "02000011110011101101", "10110011110011101101", "21221100001100010010", "02001100001100010010", "10111100001100010010",
            "00010100000101110001", "11120100000101110001", "22200100000101110001", "00011011111010001110", "11121011111010001110", "22201011111010001110",
            "11100100010110101110", "22210100010110101110", "00020100010110101110", "11101011101001010001", "22211011101001010001", "00021011101001010001",
            "12220100100001110100", "20000100100001110100", "01110100100001110100", "12221011011110001011", "20001011011110001011", "01111011011110001011",
            "01020100110010011001", "12100100110010011001", "20210100110010011001", "01021011001101100110", "12101011001101100110", "20211011001101100110",
            "22010100111101111011", "00120100111101111011", "11200100111101111011", "22011011000010000100", "00121011000010000100", "11201011000010000100",
            "11020101001010011110", "22100101001010011110", "00210101001010011110", "11021010110101100001", "22101010110101100001", "00211010110101100001",
            "10120101001010100111", "21200101001010100111", "02010101001010100111", "10121010110101011000", "21201010110101011000", "02011010110101011000",
            "02200101001011101001", "10010101001011101001", "21120101001011101001", "02201010110100010110", "10011010110100010110", "21121010110100010110",
            "21110101110101100110", "02220101110101100110", "10000101110101100110", "21111010001010011001", "02221010001010011001", "10001010001010011001",
            "20020110000111001111", "01100110000111001111", "12210110000111001111", "20021001111000110000", "01101001111000110000", "12211001111000110000",
            "01000110100010010111", "12110110100010010111", "20220110100010010111", "01001001011101101000", "12111001011101101000", "20221001011101101000",
            "02120110101101001100", "10200110101101001100", "21010110101101001100", "02121001010010110011", "10201001010010110011", "21011001010010110011",
            "20100110111110100000", "01210110111110100000", "12020110111110100000", "20101001000001011111", "01211001000001011111", "12021001000001011111",
            "20110111011000010100", "01220111011000010100", "12000111011000010100", "20111000100111101011", "01221000100111101011", "12001000100111101011",
            "02110111011001001000", "10220111011001001000", "21000111011001001000", "02111000100110110111", "10221000100110110111", "21001000100110110111",
            "11010111011001110011", "22120111011001110011", "00200111011001110011", "11011000100110001100", "22121000100110001100", "00201000100110001100",
            "22020111100100001011", "00100111100100001011", "11210111100100001011", "22021000011011110100", "00101000011011110100", "11211000011011110100",
            "21220111110110010000", "02000111110110010000", "10110111110110010000", "21221000001001101111", "02001000001001101111", "10111000001001101111",
        ],
    },
    KetFixture {
        id: "4^5x2^2",
        profile: &[(4, 5), (2, 2)],
        uniformity: 3,
        kets: &[
            "0000000", "0122001", "0233010", "0311011", "0212100", "0330101",
            "0021110", "0103111", "0323200", "0201201", "0110210", "0032211",
            "0131300", "0013301", "0302310", "0220311", "1111101", "1033100",
            "1322111", "1200110", "1303001", "1221000", "1130011", "1012010",
            "1232301", "1310300", "1001311", "1123310", "1020201", "1102200",
            "1213211", "1331210", "2222210", "2300211", "2011200", "2133201",
            "2030310", "2112311", "2203300", "2321301", "2101010", "2023011",
            "2332000", "2210001", "2313110", "2231111", "2120100", "2002101",
            "3333311", "3211310", "3100301", "3022300", "3121211", "3003210",
            "3312201", "3230200", "3010111", "3132110", "3223101", "3301100",
            "3202011", "3320010", "3031001", "3113000",
        ],
    },
    KetFixture {
        id: "4^4x2^4",
        profile: &[(4, 4), (2, 4)],
        uniformity: 3,
        kets: &[
            "00000000", "01220001", "02330010", "03110011", "02120100", "03300101",
            "00210110", "01030111", "03231000", "02011001", "01101010", "00321011",
            "01311100", "00131101", "03021110", "02201111", "11110101", "10330100",
            "13220111", "12000110", "13030001", "12210000", "11300011", "10120010",
            "12321101", "13101100", "10011111", "11231110", "10201001", "11021000",
            "12131011", "13311010", "22221010", "23001011", "20111000", "21331001",
            "20301110", "21121111", "22031100", "23211101", "21010010", "20230011",
            "23320000", "22100001", "23130110", "22310111", "21200100", "20020101",
            "33331111", "32111110", "31001101", "30221100", "31211011", "30031010",
            "33121001", "32301000", "30100111", "31320110", "32230101", "33010100",
            "32020011", "33200010", "30310001", "31130000",
        ],
    },
    KetFixture {
        id: "4^3x2^6",
        profile: &[(4, 3), (2, 6)],
        uniformity: 3,
        kets: &[
            "000000000", "012100001", "023110010", "031010011", "021100100", "033000101",
            "002010110", "010110111", "032111000", "020011001", "011001010", "003101011",
            "013011100", "001111101", "030101110", "022001111", "111010101", "103110100",
            "132100111", "120000110", "130110001", "122010000", "113000011", "101100010",
            "123101101", "131001100", "100011111", "112111110", "102001001", "110101000",
            "121111011", "133011010", "222101010", "230001011", "201011000", "213111001",
            "203001110", "211101111", "220111100", "232011101", "210010010", "202110011",
            "233100000", "221000001", "231110110", "223010111", "212000100", "200100101",
            "333111111", "321011110", "310001101", "302101100", "312011011", "300111010",
            "331101001", "323001000", "301000111", "313100110", "322110101", "330010100",
            "320100011", "332000010", "303010001", "311110000",
        ],
    },
    KetFixture {
        id: "4^2x2^8",
        profile: &[(4, 2), (2, 8)],
        uniformity: 3,
        kets: &[
            "0000000000", "0110100001", "0211110010", "0301010011", "0201100100", "0311000101",
            "0010010110", "0100110111", "0310111000", "0200011001", "0101001010", "0011101011",
            "0111011100", "0001111101", "0300101110", "0210001111", "1101010101", "1011110100",
            "1310100111", "1200000110", "1300110001", "1210010000", "1111000011", "1001100010",
            "1211101101", "1301001100", "1000011111", "1110111110", "1010001001", "1100101000",
            "1201111011", "1311011010", "2210101010", "2300001011", "2001011000", "2111111001",
            "2011001110", "2101101111", "2200111100", "2310011101", "2100010010", "2010110011",
            "2311100000", "2201000001", "2301110110", "2211010111", "2110000100", "2000100101",
            "3311111111", "3201011110", "3100001101", "3010101100", "3110011011", "3000111010",
            "3301101001", "3211001000", "3001000111", "3111100110", "3210110101", "3300010100",
            "3200100011", "3310000010", "3011010001", "3101110000",
        ],
    },
    KetFixture {
        id: "4^1x2^10",
        profile: &[(4, 1), (2, 10)],
        uniformity: 3,
        kets: &[
            "00000000000", "00110100001", "01011110010", "01101010011", "01001100100", "01111000101",
            "00010010110", "00100110111", "01110111000", "01000011001", "00101001010", "00011101011",
            "00111011100", "00001111101", "01100101110", "01010001111", "10101010101", "10011110100",
            "11110100111", "11000000110", "11100110001", "11010010000", "10111000011", "10001100010",
            "11011101101", "11101001100", "10000011111", "10110111110", "10010001001", "10100101000",
            "11001111011", "11111011010", "21010101010", "21100001011", "20001011000", "20111111001",
            "20011001110", "20101101111", "21000111100", "21110011101", "20100010010", "20010110011",
            "21111100000", "21001000001", "21101110110", "21011010111", "20110000100", "20000100101",
            "31111111111", "31001011110", "30100001101", "30010101100", "30110011011", "30000111010",
            "31101101001", "31011001000", "30001000111", "30111100110", "31010110101", "31100010100",
            "31000100011", "31110000010", "30011010001", "30101110000",
        ],
    },
];
