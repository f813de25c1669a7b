#!/usr/bin/env python3
"""Builds the bundled 10,000-entry word list and the section-title list.

Outputs:
  assets/vocabulary.txt            one word per line (exactly 10,000)
  assets/section_titles.txt        one section title per line
  src/generated/default_vocabulary.inc        C string-literal table
  src/generated/default_section_titles.inc    C string-literal table

The word list is synthesized from a hand-written set of common English
roots expanded with ordinary prefixes and suffixes, then deterministically
subsampled to exactly 10,000 unique entries. Regenerate with:

  python3 scripts/make_vocabulary.py
"""

import random
from pathlib import Path

ROOTS = """
able acid act add age agree aid aim air alarm alert allow alter amount anchor anger angle
answer appeal apply arch area argue arm arrange arrive art ash ask assess asset assign assist
atom attach attack attempt attend author award aware back badge bake balance ball band bank bar
bargain base basin basket battle beam bear beat beauty bed begin believe bell belong belt bench
bend benefit berry better bid bill bind bird birth bit bite blade blame blank blast blend bless
blind block blood bloom blow board boast boat body boil bold bolt bond bone book boost boot
border borrow bottle bottom bounce bound bowl box brain branch brand brave bread break breed
breeze brick bridge brief bright bring broad brush budget build bulk bundle burden burn burst
bury bush business busy butter button buy cabin cable cage cake call calm camp can candle cap
capital captain capture carbon card care cargo carpet carry cart carve case cash cast catch
cause caution cave cease cell cent center chain chair chalk chance change channel chapter charge
charm chart chase cheap check cheer cheese chest chief child chill choice choose chop circle
cite claim clash class clay clean clear clerk clever client cliff climb clip clock close cloth
cloud club clue coach coal coast coat code coil coin cold collect color column comb combine
comfort command comment commerce common compare compete compile complete comply compose compute
concern conclude concrete condition conduct confer confirm connect consent consider consist
constant consult consume contact contain content contest context contract control convert convey
cook cool copper copy cord core corn corner correct cost cotton count counter country county
couple courage course court cover craft crash cream create credit creek crew crime crisp critic
crop cross crowd crown crude crush crust culture cup cure curl current curve custom cut cycle
damage dance danger dare dark dart data date dawn day deal debate debt decade decide deck declare
decline deduce deed deep defend define degree delay deliver demand dense deny depart depend
deposit depth derive descend describe desert design desire desk detail detect device devote
differ digest dign dinner direct dirt discuss dish dismiss display dispute distance distinct
district disturb dive divide dock document dollar domain door dose double doubt down dozen draft
drag drain draw dream dress drift drill drink drive drop drum dry duck due dull dust duty dwell
eager early earn earth ease east easy eat edge edit effect effort elbow elect element embrace
emerge employ empty enable enclose end endure engage engine enjoy enough enrich ensure enter
entire entry equal equip erect error escape essay estate esteem estimate evening event evident
exact examine example exceed except excess exchange excite excuse exempt exercise exhaust exhibit
exist expand expect expense expert explain explore export expose express extend extent extra eye
fabric face fact factor fade fail faint fair faith fall fame family fancy far farm fashion fast
fasten fate fault favor fear feast feather feature feed feel fellow fence fetch fever field fierce
figure file fill film filter final finance find fine finger finish fire firm fish fit fix flag
flame flash flat flavor flee fleet flesh flight float flood floor flour flow flower fluid flush
fly foam focus fold follow fond food foot force forest forge form fortune forward foster found
frame free freeze freight fresh friend fringe front frost fruit fuel full function fund furnish
further future gain game gap garden gate gather gauge gaze gear general gentle genuine gift give
glad glance glass glide glow goal gold good govern grace grade grain grand grant grasp grass grave
gray graze great green greet grid grief grind grip gross ground group grove grow growth guard
guess guest guide gulf gun habit hall hand handle hang happen happy harbor hard harm harvest
haste hatch haul have hazard head heal health heap hear heart heat heavy hedge height help herd
hide high hill hint hire history hit hold hole hollow home honest honor hook hope horn horse
host hour house hover huge human humble hunt hurry hurt hut idle image imagine impact imply
import impose improve impulse incline include income increase indeed index infer inform inherit
injure inland inner input inquire insert inside insist inspect install instant instead insure
intend intent interest interior internal invent invest invite involve iron island issue item
join joint journey joy judge juice jump just justice keen keep kettle key kind kindle kitchen
knee knit knock knot know labor lace lack ladder lake lamp land lane large last latch late
laugh launch law lawn lay layer lead leaf league lean leap learn lease least leather leave
ledge left legal lend length lesson let letter level license lid life lift light like limb
limit line linen link lip liquid list listen little live load loan local lock lodge lofty log
logic lone long look loop loose lord lose loss lot loud love low loyal lucky lumber lump lunch
machine magnet maid mail main major make manage manner map marble march margin marine mark
market marsh mass master match material matter mature meadow meal mean measure meat medal meet
mellow melt member memory mention merchant mercy merge merit mesh message metal meter method
middle might mild mile milk mill mind mine mingle minor mint minute mirror miss mist mix mode
model modest modify moist moment money monitor month mood moon moral morning motion motive
motor mount mourn mouth move much mud muscle music mutual nail name narrow nation native nature
near neat neck need needle nerve nest net network neutral new news nice night noble nod noise
normal north note notice notion novel number nurse oak object oblige obscure observe obtain
occasion occupy occur ocean odd offer office often oil old open operate opinion oppose option
orbit order organ origin ornament other ounce outer output oven over owe own pace pack page
paint pair palace pale palm pan panel paper parcel pardon parent park part party pass paste
path patient pattern pause pay peace peak pear pebble pedal pen pencil people pepper percent
perfect perform perhaps period permit person phase phrase pick picture piece pile pillar pilot
pin pinch pine pink pipe pitch place plain plan plane plant plate play plead pleasant please
pledge plenty plot plow pluck plug plus pocket point pole policy polish poll pond pool poor
port portion position possess post pot pour powder power praise pray preach precise prefer
premise prepare present preserve press pretty prevail prevent price pride prime print prior
prison private prize probe problem process produce profit program progress project promise
prompt proof proper propose prospect protect protest proud prove provide public pull pulse
pump punch pupil purchase pure purple purpose pursue push put puzzle quaint quality quantity
quarter queen quest question quick quiet quite quote race rack radio rail rain raise rally
random range rank rapid rare rate rather ratio reach read ready real reason rebel recall
receive recent recite reckon recommend record recover red reduce reed refer refine reflect
reform refresh refuse regard region register regret regular reject relate relax release relief
rely remain remark remedy remember remind remote remove render renew rent repair repeat replace
reply report repose request require rescue research reserve reside resign resist resolve resort
resource respect respond rest result resume retail retain retire retreat return reveal revenue
reverse review revive reward rhythm rib ribbon rice rich ride ridge right rigid ring rinse ripe
rise risk rival river road roam roast rock rod roll roof room root rope rose rough round route
row royal rub ruin rule run rush rust sack sacred saddle safe sail sake salad sale salt same
sample sand satisfy sauce save say scale scan scarce scatter scene scheme scholar school science
scope score scorn scout scrap scrape scratch screen script scrub sea seal seam search season
seat second secret section secure see seed seek seem seize select self sell send senior sense
sentence separate series serve set settle several severe sew shade shadow shaft shake shall
shallow shape share sharp shave shear shed sheep sheer sheet shelf shell shelter shift shine
ship shock shoe shoot shop shore short shoulder shout show shower shrink shut side sift sigh
sight sign signal silent silk silver simple since single sink sit site size sketch skill skin
skirt sky slack slate slave sleek sleep slender slice slide slight slim slip slope slow small
smart smell smile smoke smooth snap soak soap sober social society soft soil solar sole solid
solve some soon sort sound source south space spare speak special speed spell spend sphere
spice spin spirit spite splend split spoil sponge spoon sport spot spray spread spring sprout
square stable stack staff stage stain stair stake stamp stand staple star stare start state
station stay steady steal steam steel steep steer stem step stern stick stiff still sting stir
stock stone stoop stop store storm story stout stove straight strain strand strange stream
street stress stretch strict stride strike string strip strive stroke strong structure struggle
study stuff stumble subject submit succeed such sudden sugar suggest suit sum summer summit sun
supply support suppose supreme sure surface surge surplus surprise surround survey survive
suspect sustain swallow swamp sweep sweet swell swift swim swing switch sword symbol system
table tackle tact tail tailor take tale talent talk tall tame tank tap target task taste tax
teach team tear tell temper temple tempt tend tender term test text thank theme theory thick
thin thing think thorn thought thread thrift thrive throw thrust thumb thunder thus tick ticket
tide tidy tie tight tilt timber time tin tiny tip tire tissue title toast today toil token
toll tone tongue tool tooth top topic torch total touch tough tour toward tower town trace
track trade trail train trait transfer transit translate transport trap travel tray treat
treaty tree tremble trench trend trial tribe tribute trick trim trip triumph troop trophy
trouble truck true trunk trust truth try tube tumble tune turn tutor twin twist type under
union unique unit unite upper urban urge usage use usher usual utter vacant vague vain valley
value vapor vary vast vault venture verge verse very vessel vest veteran view vigor village
vine vintage virtue visible vision visit vital vivid vocal voice void volume vote vow voyage
wage wagon wait wake walk wall wander want ward warm warn warrant wash waste watch water wave
way weak wealth weapon wear weather weave web week weigh weight welcome well west wet wheat
wheel while whisper whole wide wield wild will win wind window wing winter wipe wise wish wit
witness wonder wood wool word work world worry worth wound wrap wreck wrist write wrong yard
year yield young zeal zone
""".split()

PREFIXES = ["re", "un", "over", "under", "out", "pre", "mis", "dis", "inter", "sub", "fore", "counter", "semi", "non", "up"]
SUFFIXES = ["s", "ed", "ing", "er", "ers", "ly", "ness", "ment", "ful", "less", "able", "ish", "ive", "ion", "al", "ous", "y", "ery", "ance", "hood", "ward", "wise", "age", "dom", "ship"]

VOWELS = set("aeiou")


def apply_suffix(root: str, suffix: str) -> str | None:
    w = root
    if root.endswith(suffix) or root == suffix:
        return None
    if suffix == "ly" and w.endswith("le"):
        return w[:-1] + "y"
    if suffix[0] in VOWELS and w.endswith("e"):
        w = w[:-1]
    if suffix in ("ed", "ly", "ness") and w.endswith("y") and len(w) > 2 and w[-2] not in VOWELS:
        w = w[:-1] + "i"
    if suffix == "s" and (w.endswith("s") or w.endswith("sh") or w.endswith("ch") or w.endswith("x")):
        return w + "es"
    out = w + suffix
    if any(out[i] == out[i + 1] == out[i + 2] for i in range(len(out) - 2)):
        return None
    return out


def main() -> None:
    here = Path(__file__).resolve().parent.parent
    words = set(ROOTS)
    for r in ROOTS:
        for s in SUFFIXES:
            w = apply_suffix(r, s)
            if w and 3 <= len(w) <= 16:
                words.add(w)
    for p in PREFIXES:
        for r in ROOTS:
            if not r.startswith(p) and 3 <= len(p + r) <= 16:
                words.add(p + r)
    for p in ("re", "un", "over", "out", "pre"):
        for r in ROOTS:
            if r.startswith(p):
                continue
            for s in ("ed", "ing", "s"):
                w = apply_suffix(r, s)
                if w and 3 <= len(p + w) <= 16:
                    words.add(p + w)

    words = sorted(w for w in words if w.isalpha() and w.islower())
    if len(words) < 10000:
        raise SystemExit(f"only {len(words)} candidates; add roots")
    rng = random.Random(20240914)
    picked = sorted(rng.sample(words, 10000))

    titles = [
        "Fixed assets",
        "Intangible assets",
        "Tangible assets",
        "Investments",
        "Current assets",
        "Stocks",
        "Debtors",
        "Cash at bank and in hand",
        "Creditors: amounts falling due within one year",
        "Creditors: amounts falling due after more than one year",
        "Net current assets",
        "Net current liabilities",
        "Total assets less current liabilities",
        "Provisions for liabilities",
        "Accruals and deferred income",
        "Net assets",
        "Capital and reserves",
        "Called up share capital",
        "Share premium account",
        "Revaluation reserve",
        "Other reserves",
        "Profit and loss account",
        "Shareholders' funds",
        "Turnover",
        "Cost of sales",
        "Gross profit",
        "Distribution costs",
        "Administrative expenses",
        "Other operating income",
        "Operating profit",
        "Interest receivable and similar income",
        "Interest payable and similar charges",
        "Profit before taxation",
        "Tax on profit",
        "Profit for the financial year",
        "Prepayments and accrued income",
        "Non-current assets",
        "Current liabilities",
        "Non-current liabilities",
        "Total liabilities",
        "Retained earnings",
        "Total equity",
        "Cash and cash equivalents",
        "Trade and other receivables",
        "Trade and other payables",
    ]

    (here / "assets" / "vocabulary.txt").write_text("\n".join(picked) + "\n")
    (here / "assets" / "section_titles.txt").write_text("\n".join(titles) + "\n")

    gen = here / "src" / "generated"
    gen.mkdir(parents=True, exist_ok=True)
    with open(gen / "default_vocabulary.inc", "w") as f:
        f.write("// Generated by scripts/make_vocabulary.py. Do not edit by hand.\n")
        for w in picked:
            f.write(f'"{w}",\n')
    with open(gen / "default_section_titles.inc", "w") as f:
        f.write("// Generated by scripts/make_vocabulary.py. Do not edit by hand.\n")
        for t in titles:
            f.write(f'"{t.replace(chr(39), chr(39))}",\n'.replace('"' + t + '"', '"' + t.replace('"', '\\"') + '"'))

    print(f"vocabulary: {len(picked)} words; titles: {len(titles)}")


if __name__ == "__main__":
    main()
