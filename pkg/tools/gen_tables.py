#!/usr/bin/env python3
"""Regenerate the romanization tables under src/codeintl/data/translit/.

Korean is produced algorithmically from jamo parts, Japanese from a kana
base map plus digraphs, Chinese from the readings list kept here. The
script refuses to write a Chinese table that does not cover every Han
character used by the bundled en-zh dictionary, so dictionary edits force
a readings update in the same commit.

Run from the repository root:  python3 tools/gen_tables.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "src" / "codeintl" / "data" / "translit"

# --------------------------------------------------------------- Chinese
# One pinyin reading per character, tone marks dropped. Characters with
# several readings keep the one most common in code-related words; the
# table cannot express context. "lv" stands in for the u-umlaut syllable.

CHINESE_READINGS = """
一yi 七qi 三san 上shang 下xia 不bu 世shi 东dong 两liang 个ge 中zhong
串chuan 为wei 主zhu 么me 之zhi 乘cheng 九jiu 也ye 书shu 二er 于yu 五wu
些xie 交jiao 人ren 什shen 仍reng 从cong 他ta 代dai 以yi 件jian 价jia
任ren 传chuan 位wei 低di 体ti 何he 余yu 作zuo 使shi 例li 保bao 值zhi
假jia 做zuo 停ting 偶ou 储chu 像xiang 元yuan 充chong 入ru 全quan 八ba
六liu 关guan 其qi 典dian 内nei 再zai 写xie 减jian 出chu 分fen 列lie
则ze 创chuang 删shan 利li 别bie 到dao 制zhi 前qian 割ge 加jia 务wu
动dong 助zhu 包bao 北bei 十shi 千qian 半ban 单dan 南nan 印yin 双shuang
发fa 取qu 口kou 只zhi 可ke 右you 叶ye 号hao 合he 同tong 名ming 后hou
向xiang 否fou 含han 告gao 周zhou 和he 响xiang 哪na 器qi 四si 回hui
因yin 围wei 图tu 圆yuan 圈quan 在zai 地di 址zhi 均jun 坏huai 块kuai
型xing 塔ta 填tian 墙qiang 处chu 复fu 外wai 多duo 大da 太tai 头tou
奇qi 契qie 好hao 如ru 始shi 子zi 字zi 存cun 学xue 它ta 安an 完wan
定ding 客ke 家jia 宽kuan 射she 小xiao 少shao 就jiu 层ceng 居ju 屏ping
山shan 工gong 左zuo 已yi 币bi 师shi 幕mu 平ping 年nian 并bing 序xu
应ying 底di 度du 建jian 开kai 式shi 引yin 弹dan 当dang 录lu 径jing
待dai 很hen 循xun 心xin 必bi 志zhi 快kuai 态tai 怎zen 思si 总zong
息xi 意yi 感gan 慢man 戏xi 成cheng 或huo 户hu 房fang 所suo 手shou
打da 找zhao 报bao 持chi 指zhi 按an 换huan 据ju 排pai 接jie 推tui
插cha 收shou 效xiao 数shu 整zheng 文wen 斐fei 新xin 方fang 无wu 日ri
旧jiu 时shi 映ying 是shi 显xian 更geng 曾ceng 最zui 月yue 有you 服fu
朝chao 期qi 本ben 机ji 条tiao 来lai 构gou 析xi 果guo 查cha 标biao
栈zhan 树shu 根gen 格ge 案an 桥qiao 梯ti 检jian 棋qi 楼lou 模mo 次ci
止zhi 正zheng 步bu 段duan 母mu 每mei 比bi 求qiu 没mei 波bo 注zhu
活huo 测ce 消xiao 添tian 清qing 温wen 游you 源yuan 满man 点dian
然ran 爱ai 父fu 牌pai 状zhuang 率lv 玩wan 环huan 现xian 理li 生sheng
用yong 由you 界jie 百bai 的de 盘pan 目mu 直zhi 相xiang 真zhen 矩ju
短duan 码ma 硬ying 示shi 离li 种zhong 积ji 移yi 税shui 空kong
窗chuang 端duan 符fu 第di 等deng 答da 签qian 算suan 类lei 系xi 素su
索suo 级ji 组zu 终zhong 经jing 结jie 绘hui 给gei 络luo 绩ji 绪xu
网wang 置zhi 翻fan 老lao 者zhe 能neng 色se 节jie 范fan 获huo 菜cai
落luo 藏cang 蜂feng 行xing 街jie 表biao 西xi 要yao 见jian 视shi
角jiao 解jie 言yan 警jing 计ji 记ji 许xu 设she 访fang 词ci 译yi
试shi 该gai 语yu 误wu 请qing 读du 调diao 负fu 账zhang 赛sai 走zou
超chao 距ju 路lu 身shen 转zhuan 载zai 较jiao 输shu 边bian 过guo
运yun 返fan 这zhe 进jin 连lian 送song 选xuan 速su 道dao 那na 邻lin
部bu 里li 重zhong 量liang 金jin 针zhen 钮niu 钱qian 错cuo 键jian
长chang 门men 闭bi 问wen 间jian 队dui 阵zhen 附fu 限xian 除chu
隐yin 集ji 零ling 面mian 页ye 顶ding 项xiang 须xu 题ti 颜yan 额e
高gao 鸣ming
你ni 我wo 她ta 谢xie 天tian 明ming 白bai 看kan 想xiang 知zhi 识shi
会hui 说shuo 去qu 对dui 信xin 简jian 难nan 习xi 练lian 箱xiang 句ju
呼hu 喊han 顿dun 束shu 遍bian 续xu 共gong 差cha 商shang 幂mi 堆dui
深shen 浅qian 宿su 舍she 课ke 卷juan 章zhang 篇pian 银yin 卡ka 密mi
匙chi 锁suo 灯deng 光guang 影ying 音yin 乐le 歌ge 曲qu 拍pai 秒miao
钟zhong 刻ke 令ling
亮liang 份fen 佳jia 候hou 先xian 具ju 切qie 初chu 励li 卧wo 即ji
历li 厨chu 反fan 史shi 命ming 奖jiang 室shi 将jiang 尔er 尾wei
巡xun 形xing 扫sao 拾shi 描miao 提ti 放fang 晚wan 普pu 未wei 板ban
架jia 染ran 槽cao 款kuan 法fa 海hai 混hun 渲xuan 盒he 盖gai 碰peng
票piao 程cheng 笔bi 线xian 覆fu 触chu 起qi 跟gen 踪zong 述shu
通tong 逻luo 醒xing 随sui 隔ge 雷lei 领ling 风feng 龟gui
伐fa 旋xuan 沿yan 着zhe 踱duo 采cai
"""

# ------------------------------------------------------------- Japanese
# Hepburn-style kana readings; the sokuon and the long-vowel mark drop
# out because a single-character rule cannot double the next consonant.

_HIRAGANA = {
    "あ": "a", "い": "i", "う": "u", "え": "e", "お": "o",
    "か": "ka", "き": "ki", "く": "ku", "け": "ke", "こ": "ko",
    "さ": "sa", "し": "shi", "す": "su", "せ": "se", "そ": "so",
    "た": "ta", "ち": "chi", "つ": "tsu", "て": "te", "と": "to",
    "な": "na", "に": "ni", "ぬ": "nu", "ね": "ne", "の": "no",
    "は": "ha", "ひ": "hi", "ふ": "fu", "へ": "he", "ほ": "ho",
    "ま": "ma", "み": "mi", "む": "mu", "め": "me", "も": "mo",
    "や": "ya", "ゆ": "yu", "よ": "yo",
    "ら": "ra", "り": "ri", "る": "ru", "れ": "re", "ろ": "ro",
    "わ": "wa", "ゐ": "wi", "ゑ": "we", "を": "wo", "ん": "n",
    "が": "ga", "ぎ": "gi", "ぐ": "gu", "げ": "ge", "ご": "go",
    "ざ": "za", "じ": "ji", "ず": "zu", "ぜ": "ze", "ぞ": "zo",
    "だ": "da", "ぢ": "ji", "づ": "zu", "で": "de", "ど": "do",
    "ば": "ba", "び": "bi", "ぶ": "bu", "べ": "be", "ぼ": "bo",
    "ぱ": "pa", "ぴ": "pi", "ぷ": "pu", "ぺ": "pe", "ぽ": "po",
    "ぁ": "a", "ぃ": "i", "ぅ": "u", "ぇ": "e", "ぉ": "o",
    "ゃ": "ya", "ゅ": "yu", "ょ": "yo", "ゎ": "wa",
    "っ": "", "ゔ": "vu",
}

_DIGRAPH_ONSETS = {
    "き": "ky", "ぎ": "gy", "に": "ny", "ひ": "hy", "び": "by",
    "ぴ": "py", "み": "my", "り": "ry",
    "し": "sh", "ち": "ch", "じ": "j", "ぢ": "j",
}
_SMALL_VOWEL = {"ゃ": "a", "ゅ": "u", "ょ": "o"}


def japanese_rules() -> list[tuple[str, str]]:
    rules: dict[str, str] = {}
    for kana, out in _HIRAGANA.items():
        rules[kana] = out
        katakana = chr(ord(kana) + 0x60)
        rules[katakana] = out
    for onset_kana, onset in _DIGRAPH_ONSETS.items():
        for small, vowel in _SMALL_VOWEL.items():
            rules[onset_kana + small] = onset + vowel
            rules[chr(ord(onset_kana) + 0x60) + chr(ord(small) + 0x60)] = onset + vowel
    # marks that appear inside words
    rules["ー"] = ""      # long-vowel mark
    rules["・"] = ""      # interpunct
    rules["ヵ"] = "ka"
    rules["ヶ"] = "ke"
    return sorted(rules.items())


# --------------------------------------------------------------- Korean
# Letter-faithful Revised Romanization of every precomposed syllable;
# finals keep their letter values rather than assimilated sounds.

_CHO = ["g", "kk", "n", "d", "tt", "r", "m", "b", "pp", "s", "ss", "",
        "j", "jj", "ch", "k", "t", "p", "h"]
_JUNG = ["a", "ae", "ya", "yae", "eo", "e", "yeo", "ye", "o", "wa",
         "wae", "oe", "yo", "u", "wo", "we", "wi", "yu", "eu", "ui", "i"]
_JONG = ["", "g", "kk", "gs", "n", "nj", "nh", "d", "l", "lg", "lm",
         "lb", "ls", "lt", "lp", "lh", "m", "b", "bs", "s", "ss", "ng",
         "j", "ch", "k", "t", "p", "h"]


def korean_rules() -> list[tuple[str, str]]:
    rules = []
    for code in range(0xAC00, 0xD7A4):
        offset = code - 0xAC00
        cho = offset // (21 * 28)
        jung = (offset % (21 * 28)) // 28
        jong = offset % 28
        rules.append((chr(code), _CHO[cho] + _JUNG[jung] + _JONG[jong]))
    return rules


# ----------------------------------------------------- hand-kept tables

ARABIC = """
# Arabic chat-alphabet romanization. Numerals follow the common
# convention for letters without a Latin neighbor: 2 for hamza, 3 for
# ayn, 7 for haa. Harakat and the tatweel drop out.
ا	a
أ	a
إ	i
آ	a
ء	2
ؤ	2
ئ	2
ب	b
ت	t
ث	th
ج	j
ح	7
خ	kh
د	d
ذ	dh
ر	r
ز	z
س	s
ش	sh
ص	s
ض	d
ط	t
ظ	z
ع	3
غ	gh
ف	f
ق	q
ك	k
ل	l
م	m
ن	n
ه	h
ة	a
و	w
ي	y
ى	a
ـ
َ	a
ُ	u
ِ	i
ً	an
ٌ	un
ٍ	in
ّ
ْ
٠	0
١	1
٢	2
٣	3
٤	4
٥	5
٦	6
٧	7
٨	8
٩	9
"""

HEBREW = """
# Hebrew romanization, common-practice; final letter forms share their
# base letter's value. Niqqud vowels map to plain vowels, shva and
# dagesh drop out.
א	a
ב	v
ג	g
ד	d
ה	h
ו	v
ז	z
ח	ch
ט	t
י	y
כ	k
ך	k
ל	l
מ	m
ם	m
נ	n
ן	n
ס	s
ע	a
פ	p
ף	f
צ	ts
ץ	ts
ק	k
ר	r
ש	sh
ת	t
ָ	a
ַ	a
ֵ	e
ֶ	e
ִ	i
ֹ	o
ֻ	u
ְ
ּ
ֿ
ֺ	o
"""

RUSSIAN = """
# Russian romanization, BGN/PCGN-style without diacritics. Hard and
# soft signs drop out.
а	a
б	b
в	v
г	g
д	d
е	e
ё	yo
ж	zh
з	z
и	i
й	y
к	k
л	l
м	m
н	n
о	o
п	p
р	r
с	s
т	t
у	u
ф	f
х	kh
ц	ts
ч	ch
ш	sh
щ	shch
ъ
ы	y
ь
э	e
ю	yu
я	ya
А	A
Б	B
В	V
Г	G
Д	D
Е	E
Ё	Yo
Ж	Zh
З	Z
И	I
Й	Y
К	K
Л	L
М	M
Н	N
О	O
П	P
Р	R
С	S
Т	T
У	U
Ф	F
Х	Kh
Ц	Ts
Ч	Ch
Ш	Sh
Щ	Shch
Ъ
Ы	Y
Ь
Э	E
Ю	Yu
Я	Ya
"""

LATIN = """
# Latin letters that canonical decomposition cannot reduce to ASCII.
ø	o
Ø	O
æ	ae
Æ	AE
œ	oe
Œ	OE
ß	ss
đ	d
Đ	D
ħ	h
Ħ	H
ł	l
Ł	L
þ	th
Þ	Th
ð	d
Ð	D
ŋ	ng
Ŋ	NG
ı	i
ĸ	k
"""


def parse_chinese() -> list[tuple[str, str]]:
    rules: dict[str, str] = {}
    for token in CHINESE_READINGS.split():
        # token = one or more Han chars followed by the pinyin letters
        chars = [c for c in token if not c.isascii()]
        reading = "".join(c for c in token if c.isascii())
        if len(chars) == 1:
            rules.setdefault(chars[0], reading)
        # multi-char tokens are typos; ignore them loudly
        elif chars:
            print(f"warning: skipping multi-char token {token!r}", file=sys.stderr)
    return sorted(rules.items())


def write_table(name: str, header: str, rules: list[tuple[str, str]]) -> None:
    lines = [f"# {line}" for line in header.strip().splitlines()]
    for src, out in rules:
        lines.append(f"{src}\t{out}")
    (OUT / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {name}: {len(rules)} rules")


def write_literal(name: str, body: str) -> None:
    rules = 0
    lines = []
    for line in body.strip().splitlines():
        lines.append(line.rstrip() if line.startswith("#") else line)
        if not line.startswith("#"):
            rules += 1
    (OUT / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {name}: {rules} rules")


def check_coverage(chinese: dict[str, str]) -> None:
    dict_path = ROOT / "src" / "codeintl" / "data" / "dicts" / "en-zh.json"
    entries = json.loads(dict_path.read_text(encoding="utf-8"))["entries"]
    used = set()
    for value in entries.values():
        text = value if isinstance(value, str) else (
            value["default"] + "".join(value.get("verb", {}).values()))
        used |= {c for c in text if 0x4E00 <= ord(c) <= 0x9FFF}
    missing = used - set(chinese)
    if missing:
        sys.exit(f"chinese.tsv misses dictionary characters: {''.join(sorted(missing))}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    chinese = parse_chinese()
    check_coverage(dict(chinese))
    write_table("chinese.tsv",
                "Mandarin readings, pinyin without tone marks, one reading\n"
                "per character (see tools/gen_tables.py).", chinese)
    write_table("japanese.tsv",
                "Kana romanization, Hepburn-style. Sokuon and the long\n"
                "vowel mark drop out. Kanji go through the Chinese table.",
                japanese_rules())
    write_table("korean.tsv",
                "Hangul syllables, letter-faithful Revised Romanization\n"
                "(generated; see tools/gen_tables.py).", korean_rules())
    write_literal("arabic.tsv", ARABIC)
    write_literal("hebrew.tsv", HEBREW)
    write_literal("russian.tsv", RUSSIAN)
    write_literal("latin.tsv", LATIN)


if __name__ == "__main__":
    main()
