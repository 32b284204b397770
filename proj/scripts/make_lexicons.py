#!/usr/bin/env python3
"""Regenerate data/lexicons/{english,hindi_roman}.txt.

Both wordlists are produced deterministically from the curated tables below:
English lemmas are expanded with regular inflections, romanized-Hindi verb
stems with conjugation suffixes and adjectives with gender/number agreement,
plus collapsed long-vowel spelling variants (aa/a, ii/i, uu/u, ee/i).

Generated Hindi forms that collide with the English list are skipped so the
expansion cannot invent ambiguity; collisions between the hand-curated lists
themselves (door, log, sang, ...) are kept deliberately — the tagger resolves
a both-lists hit to the neutral tag, which is the honest answer for genuinely
shared forms.

Output is one lowercase form per line, sorted, with '#' header comments.
Run from the repository root:  python3 scripts/make_lexicons.py
"""

from __future__ import annotations

import pathlib

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "data" / "lexicons"

VOWELS = set("aeiou")

# ---------------------------------------------------------------- English --

# Function words, contractions and common adverbs (closed class, no
# inflection).
EN_FUNCTION = """
a about above across after again against all almost along already also
although always am among an and another any anybody anyone anything anywhere
are around as at away back be because been before behind being below beneath
beside besides between beyond both but by can cannot could did do does doing
done down during each either else enough even ever every everybody everyone
everything everywhere few for from further had has have having he her here
hers herself him himself his how however i if in indeed inside instead into
is it its itself just least less let like mainly may me might mine more most
much must my myself near neither never next no nobody none nor not nothing
now nowhere of off often on once one only onto or other others otherwise our
ours ourselves out outside over own per perhaps quite rather really same
seldom several shall she should since so some somebody someone something
sometimes somewhere still such than that the their theirs them themselves
then there therefore these they this those though through throughout thus
till to together too toward towards under underneath until unto up upon upto
us very was we well were what whatever when whenever where whereas wherever
whether which whichever while who whoever whom whose why will with within
without would yes yet you your yours yourself yourselves
aren't can't couldn't didn't doesn't don't hadn't hasn't haven't he's i'd
i'll i'm i've isn't it's let's she's shouldn't that's there's they're
they've wasn't we're we've weren't won't wouldn't you're you've
""".split()

# Open-class lemmas inflected below: n = noun (plural), v = verb
# (s/ed/ing), adj = adjective (er/est when short, -ly).
EN_NOUNS = """
ability account act action activity addition address administration
advantage advertisement advice age agency agreement aim air airline airport
amount analysis animal answer apartment apple application appointment area
argument arm army arrangement art article artist attack attempt attention
audience author authority award baby background bag balance ball bank base
basis battle beach bed beginning benefit bill bird birth birthday block
blood board boat body book border bottle bottom box boy brain branch bread
breakfast bridge brother budget building bus business camera camp campaign
candidate capital captain car card care career case cash cat category cause
cell center century ceremony chain chair challenge chance change chapter
character charge chest chief child choice church circle citizen city claim
class classroom client climate clock cloth cloud club coach coast coffee
college color committee community company comparison competition computer
concept concern conclusion condition conference confidence connection
consequence construction contact content contest context contract
contribution control conversation cook corner cost cotton council country
couple courage course court cousin cover cow craft credit crime crisis
criticism crowd culture cup currency customer cycle dance danger data date
daughter day deal death debate debt decade decision defense definition
degree delivery demand department departure deposit depth description
design desire desk detail development device dinner direction director
discipline discussion disease dish distance district doctor document dog
door doubt dozen drama dream dress drink driver drug duty ear earth east
economy edge editor education effect effort egg election electricity
emergency emotion emphasis employee employer end enemy energy engine
engineer entry environment episode equipment error escape estate estimate
event evidence exam example exchange excitement exercise exit experience
expert explanation expression extent eye face fact factor factory failure
faith family fan farm farmer father fault feature fee feeling festival
field fight figure film finding finger fire firm fish flag flight floor
flower focus food foot force forest form fortune foundation frame freedom
friend front fruit fuel function fund future game garden gas gate gift girl
glass goal god gold government grade grain grandmother grass ground group
growth guard guess guest guide gun guy habit hair half hall hand harm hat
head health heart heat height hell help hero highway hill history hole
holiday home honey hope horse hospital host hotel hour house husband idea
image imagination impact importance impression improvement incident income
increase independence industry inflation information initiative injury
insect inspector instance institution insurance intention interaction
interest internet interview introduction investment invitation iron island
issue item job journalist journey joy judge juice key kid kind king kitchen
knee knife knowledge lab labor lack ladder lady lake land language law
lawyer leader leadership league lecture leg length lesson letter level
library life light limit line link lip list literature loan location lock
log look loss lot love luck lunch machine magazine mail majority man
management manager manner map margin mark market marriage master match
material matter meal meaning measure measurement meat media medicine
meeting member membership memory message metal method middle midnight milk
mind minister minority minute mirror mission mistake mixture mode model
moment money month mood morning mother motor mountain mouse mouth move
movement movie mud muscle museum music nation nature neck need negotiation
neighbor network news newspaper night noise north nose note notice novel
number nurse object obligation occasion ocean offer office officer oil
operation opinion opportunity option orange order organization outcome oven
owner page pain painting pair paper paragraph parent park part partner
party passage passenger passion past path patience patient pattern pause
payment peace pen pencil people pepper percentage perception performance
period permission person personality perspective phase philosophy phone
photo phrase physics piano picture piece pipe place plan plane plant
plastic plate platform player pleasure poem poet point police policy
politician politics pollution pool population position possession
possibility post pot potato power practice preference preparation presence
present president pressure price pride priest principle print priority
prison problem procedure process produce product profession professor
profile profit program progress project promise promotion proof property
proposal protection psychology public purpose quality quantity quarter
queen question queue rain range rate ratio reaction reader reality reason
recipe recognition record recording reduction reference reflection region
relation relationship release relief religion rent repair reply report
reputation request requirement research resident resolution resource
respect response responsibility rest restaurant result revenue review
revolution reward rice ring risk river road rock role roof room root rope
rose round route routine rule safety salad salary sale salt sample sand
scale scene schedule scheme school science screen sea season seat second
secretary section sector security selection self sense sentence series
service session shape share shirt shock shoe shop shoulder show side sign
signal signature silence silver singer sir sister site situation size
skill skin sky sleep smile smoke snow society software soil soldier
solution son song sort sound soup source south space speaker speech speed
spirit sport spot spring square stage standard star start state statement
station status steel step stock stomach stone storage store storm story
stranger strategy street strength stress structure student studio study
stuff style subject success sugar suggestion summer sun supply support
surface surgery surprise survey system table talk tale target task taste
tax tea teacher team technique technology telephone television temperature
tendency tension term test text thanks theme theory thing thought throat
ticket time tip title tone tongue tool tooth top topic tour tourist towel
tower town toy trade tradition traffic train training transition transport
travel treatment tree trend trial trip trouble truck trust truth turn type
uncle understanding union unit university user vacation value variety
vegetable vehicle version victim victory video view village virus visit
visitor voice volume vote wall war warning watch water wave way wealth
weather wedding week weekend weight west wife wind window wine winner
winter woman wood word work worker world worry wound writer writing yard
year youth zone
""".split()

EN_VERBS = """
accept achieve add admit affect afford agree allow announce appear apply
appoint argue arrive ask assume attend avoid base bear beat become begin
believe belong borrow break bring build burn buy call carry catch cause
change charge check choose claim clean clear climb close collect combine
come compare complain complete concern confirm connect consider consist
contain continue contribute cook copy correct count cover create cross cry
cut dance decide declare define deliver demand deny depend describe destroy
develop die disappear discover discuss divide draw dress drink drive drop
earn eat enable encourage enjoy ensure enter establish examine exist expand
expect explain express extend face fail fall feed feel fill find finish fit
fly focus fold follow force forget forgive form gain get give go grow
handle happen hate hear help hide hit hold hope hurt identify ignore
imagine improve include increase indicate inform intend introduce invite
involve join jump keep kill knock know laugh lay lead learn leave lend lie
lift listen live look lose love maintain make manage mark matter mean
measure meet mention mind miss mix move need notice obtain occur open
operate order own paint pass pay perform pick plan play point prefer
prepare present press prevent produce promise protect prove provide publish
pull push put raise reach read realize receive recognize recommend reduce
refer reflect refuse regard relate release remain remember remind remove
repeat replace reply report represent require rest return reveal ride ring
rise run save say see seek seem sell send serve set settle shake share
shout sing sit sleep smile solve speak spend stand start stay stop study
succeed suffer suggest supply support suppose survive take talk teach tell
tend thank think throw touch train travel treat try turn understand use
visit wait walk want warn wash watch wear win wish wonder work worry write
""".split()

EN_ADJECTIVES = """
able active actual additional afraid alive angry annual available average
aware bad basic beautiful big bitter black blind blue bored boring brave
brief bright broad brown busy calm capable careful cheap clean clear clever
cold comfortable common complete complex cool correct crazy critical
cultural curious current dangerous dark dead deep democratic different
difficult direct dirty double dry early eastern easy economic effective
efficient empty entire equal essential exact excellent expensive fair
famous far fast fat final financial fine firm flat foreign formal former
free fresh friendly full funny general gentle glad global good great green
guilty happy hard healthy heavy high historical honest hot huge human
hungry ill illegal important impossible independent individual informal
inner international joint kind large late lazy legal light likely little
local lonely long loose loud low lucky mad major male massive medical
mental military minor mobile modern moral narrow national natural nearby
neat necessary negative nervous new nice normal northern obvious odd
official old open ordinary original outer pale particular past perfect
permanent personal physical pink plain pleasant political poor popular
positive possible powerful practical pregnant previous primary private
professional proper proud pure quick quiet rare raw ready real recent red
regional regular relevant reliable religious remote rich right rough royal
rural sad safe scientific secret senior separate serious severe sharp
short sick significant silent similar simple single slow small smart
smooth social soft solid sorry southern special specific spiritual stable
standard straight strange strict strong stupid successful sudden
sufficient suitable sure sweet tall technical temporary terrible thick
thin tight tiny tired total tough traditional typical ugly unable unique
united unlikely unusual upper urban useful usual various warm weak wealthy
western wet white whole wide wild willing wise wooden wrong young
""".split()

# Hand-listed irregular pasts/participles/plurals.
EN_IRREGULAR = """
began begun bought broke broken brought built came caught children chose
chosen did done drank drawn drew driven drove eaten fallen feet fell felt
flew flown forgot forgotten fought found gave given gone got grew grown
heard held hidden kept knew known laid lain led left lent lost made meant
men met mice paid ran rose said sang sat saw seen sent shook shown slept
sold sought spent spoke spoken stood stolen swam taken taught teeth
thought threw told took understood went woke women won wore worn wrote
""".split()

# Verbs whose past is irregular (listed above): skip the -ed form.
EN_NO_ED = set(
    """
    bear beat become begin break bring build buy catch choose come cut
    deal draw drink drive eat fall feed feel fight find fly forget forgive
    get give go grow hear hide hit hold hurt keep know lay lead leave lend
    let lie lose make mean meet pay put read ride ring rise run say see
    seek sell send set shake sing sit sleep speak spend stand take teach
    tell think throw understand wear win write
    """.split()
)

# -ed/-ing doubling applies to CVC stems except these -er/-en/-it endings.
EN_NO_DOUBLE = set(
    """
    visit open happen offer suffer listen wonder order matter cover enter
    remember
    """.split()
)


def en_noun_forms(lemma: str) -> set[str]:
    forms = {lemma}
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(lemma + "es")
    elif lemma.endswith("y") and lemma[-2] not in VOWELS:
        forms.add(lemma[:-1] + "ies")
    elif lemma.endswith("fe"):
        forms.add(lemma[:-2] + "ves")
    elif lemma.endswith("f") and lemma not in {"roof", "chief", "belief", "proof"}:
        forms.add(lemma[:-1] + "ves")
    else:
        forms.add(lemma + "s")
    return forms


def en_verb_forms(lemma: str) -> set[str]:
    forms = {lemma}
    # third person singular
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        forms.add(lemma + "es")
    elif lemma.endswith("y") and lemma[-2] not in VOWELS:
        forms.add(lemma[:-1] + "ies")
    else:
        forms.add(lemma + "s")
    # gerund
    if lemma.endswith("ie"):
        forms.add(lemma[:-2] + "ying")
    elif lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        forms.add(lemma[:-1] + "ing")
    elif _doubles(lemma):
        forms.add(lemma + lemma[-1] + "ing")
    else:
        forms.add(lemma + "ing")
    # past
    if lemma in EN_NO_ED:
        return forms
    if lemma.endswith("e"):
        forms.add(lemma + "d")
    elif lemma.endswith("y") and lemma[-2] not in VOWELS:
        forms.add(lemma[:-1] + "ied")
    elif _doubles(lemma):
        forms.add(lemma + lemma[-1] + "ed")
    else:
        forms.add(lemma + "ed")
    return forms


def _doubles(lemma: str) -> bool:
    return (
        len(lemma) >= 3
        and lemma[-1] not in VOWELS | set("wxy")
        and lemma[-2] in VOWELS
        and lemma[-3] not in VOWELS
        and lemma not in EN_NO_DOUBLE
    )


def en_adj_forms(lemma: str) -> set[str]:
    forms = {lemma}
    if len(lemma) <= 5 and not lemma.endswith(("ful", "ous", "ive", "al")):
        if lemma.endswith("e"):
            forms.update({lemma + "r", lemma + "st"})
        elif lemma.endswith("y") and lemma[-2] not in VOWELS:
            forms.update({lemma[:-1] + "ier", lemma[:-1] + "iest"})
        elif _doubles(lemma):
            forms.update({lemma + lemma[-1] + "er", lemma + lemma[-1] + "est"})
        else:
            forms.update({lemma + "er", lemma + "est"})
    if len(lemma) >= 4:
        forms.add(lemma[:-1] + "ily" if lemma.endswith("y") else lemma + "ly")
    return forms


def english_words() -> set[str]:
    words: set[str] = set(EN_FUNCTION) | set(EN_IRREGULAR)
    for lemma in EN_NOUNS:
        words |= en_noun_forms(lemma)
    for lemma in EN_VERBS:
        words |= en_verb_forms(lemma)
    for lemma in EN_ADJECTIVES:
        words |= en_adj_forms(lemma)
    return words


# ---------------------------------------------------- romanized Hindi ------

# Closed-class items and fixed forms: pronouns, postpositions, particles,
# auxiliaries, question words, numerals, adverbs, interjections. English
# homographs of core function words (to, do, the, or, age, is, us, ...) are
# deliberately left out; the dominant reading in Roman script is English.
HI_FIXED = """
main mai mujhe mujhko mujhse mera meri mere hum humein hamein humko hamse
hamara hamari hamare tu tujhe tujhko tera teri tere tum tumhe tumhein
tumko tumse tumhara tumhari tumhare aap aapko aapse aapka aapki aapke apna
apni apne khud yeh ye yah woh wo vah inhe inhein unhe unhein inka inki
inke unka unki unke iska iski iske uska uski uske isse usse isliye
kisliye kisi kaun kaunsa kaunsi kaunse kya kyun kyon kab kahan kaha
kahaan kaise kaisa kaisi kitna kitni kitne jitna jitni jitne utna utni
utne yahan yahaan wahan wahaan waha jahan jahaan idhar udhar jidhar
kidhar ka ki ke ko se mein mei par pe tak liye lie wala wali wale vala
vali vale sang sath saath bina bagair andar bahar baahar upar uppar
neeche niche paas pas peeche piche pichhe aage samne saamne beech bich
karib kareeb nazdeek door dur taraf hai hain ho hoon hun hu tha thi thay
thhe rahega rahegi rahenge hoga hogi honge hota hoti hote hua hui hue
raha rahi rahe chuka chuki chuke sakta sakti sakte chahiye chahie padega
padegi padenge nahi nahin nahee na mat bhi toh hi sirf sirph keval bas
aur ya athva lekin magar kintu parantu kyunki kyonki kyuki chunki agar
yadi jab tab ab abhi phir fir dobara kal aaj parson subah savere shaam
sham raat din dopahar bahut bohot bahot thoda thodi thode zyada jyada
zyaada kam sab sabhi kuch kucch kuchh koi har kai kayi ek dono teen tin
chaar char panch paanch chhe cheh saat aath ath nau das gyarah barah
terah chaudah pandrah solah satrah atharah unnis bees tees chalis pachas
sattar assi nabbe sau hazar hazaar lakh crore karod pehla pehli pehle
doosra doosri doosre dusra dusri dusre teesra teesri teesre aadha adha
sava dedh dhai matlab yaani yani shayad zaroor jarur zarur bilkul ekdam
haan han ji arre wah vaah oho khair lo bhala theek thik sahi galat
""".split()

# Verb stems expanded with the conjugation endings below. Stems whose bare
# form is an English word keep their inflections but drop the bare entry.
HI_VERB_STEMS = """
kar ho ja aa de le mil bol kah keh dekh sun samajh soch ban bana banwa
chal chala likh padh parh khel kha khila pi pila rakh uth utha baith
bitha laga lag nikal pahunch badh bata dikha dikh sikha seekh sikh bhej
bula puch pooch poochh maang mang jaan man maan rok tod jod gir gira
phek fek pakad chhod chod bach bacha kaat kat mar maar jee ji so dho gaa
ga naach nach hans has ro daud bhag bhaag ruk lad jhagad kamaa kama
khareed kharid bech badal ghoom ghum
""".split()

HI_BARE_STEM_SKIP = {"man", "so", "has", "sun", "ban", "lad", "kat", "gaa", "ga"}

HI_VERB_SUFFIXES = """
na ne ni ta te ti a e i o en kar ke ega egi enge oge unga ungi aya ayi
aye ao aao iye iyega ayega ayegi ayenge
""".split()

# Masculine -a adjectives; feminine -i and plural/oblique -e are derived.
HI_ADJ_MASC = """
accha achha acha bura bada chhota chota naya purana lamba chauda mota
patla thanda gehra halka sasta mehnga seedha pyara saccha sacha jhootha
jhutha poora pura ooncha uncha neecha geela sookha sukha khatta meetha
mitha kadva tagda bhola seedha sajeela nikamma
""".split()

# Invariant adjectives and adverbs of quality.
HI_ADJ_FIXED = """
saaf saf garam tez dheema sundar khoobsurat khubsurat mushkil aasan asan
zaroori jaruri khaas khas aam lajawab bemisaal bharpoor bharpur kamzor
mazboot majboot imandar beimaan hoshiyar samajhdar bewakoof bevakoof
pagal deewana divana mashhoor mashhur badnaam garib gareeb ameer amir
bimar beemar swasth tandurust bhooka bhukha pyasa pyaasa udaas khush
naraz naaraz hairan pareshan parishan
""".split()

# Fixed nouns and other content words (no agreement expansion).
HI_NOUNS = """
aadmi aurat ladka ladki ladke bachcha bachche bachchi log logon insaan
insan dost yaar bhai behen didi bhaiya maa pita papa beta beti ghar
makaan makan kamra darwaza khidki chhat zameen jameen aasman aasmaan
suraj sooraj chand chaand sitara sitare taara hawa paani pani aag mitti
patthar ped paudha phool phal patta jungle pahad pahaad nadi samundar
samudra baarish barish dhoop chhaya sardi garmi mausam desh videsh rajya
shahar sheher gaon ganv basti sadak rasta raasta gali chauraha bazaar
bazar dukaan dukan mandir masjid gurudwara vidyalaya pathshala kitab
kitaab kalam kagaz kaagaz akhbar akhbaar khabar khabrein kahani kavita
geet gaana gaane sangeet kala khiladi maidan jeet haar kaam naukri
paisa paise rupaya rupaye daam keemat kimat karza byaj vyapar vyapaar
kheti kisaan kisan fasal anaj gehu chawal daal roti sabzi sabji doodh
dudh dahi ghee tel namak mirch masala chai chini mithai khana khaana
nashta seb kela angoor pyaz aloo tamatar kapda kapde kurta joota joote
chappal topi ghadi ghanta ghante pal samay waqt vakt zamana jamana saal
varsh mahina mahine hafta hafte umar umr zindagi jindagi maut jeevan
jivan sharir shareer sar sir aankh aankhein naak kaan munh muh haath
hath pair paer ungli pet peeth dil dimaag dimag khoon khun dard bukhar
dawa dawai ilaj aspatal marz rog sehat bhasha boli shabd baat batein
baatein awaaz awaz sawal jawab jawaab prashn uttar arth naam pata
chitthi sandesh khat samachar suchana soochna vichar vichaar raay salah
sapna sapne khwab yaad yaadein ummeed umeed asha bharosa vishwas shak
sandeh dar bhay himmat sahas krodh gussa khushi khushiyan dukh dukhi gam
sukh chain shanti shor halla mehnat koshish kosish madad sahayata seva
farz zimmedari adhikar haq kanoon kanun niyam sarkar sarkaar neta mantri
pradhan raja rani praja jhanda dhwaj sena fauj yudh ladai sandhi chunav
janta samaj parivar pariwar rishta rishte shaadi shadi vivah dulha
dulhan mehman atithi tyohar tyohaar parv diwali holi rakhi puja pooja
prarthna namaz bhagwan ishwar allah khuda dharam dharm karm paap punya
swarg narak kismat bhagya taqdeer naseeb
""".split()

# Variant spellings: collapse doubled long vowels.
VARIANT_MAP = [("aa", "a"), ("ii", "i"), ("uu", "u"), ("ee", "i")]


def hindi_words(english: set[str]) -> set[str]:
    words: set[str] = set()

    def add(form: str, generated: bool) -> None:
        # generated forms never introduce an English collision
        if len(form) >= 2 and form.isalpha() and not (generated and form in english):
            words.add(form)

    for w in HI_FIXED + HI_ADJ_FIXED + HI_NOUNS:
        add(w, generated=False)
    for stem in HI_VERB_STEMS:
        if stem not in HI_BARE_STEM_SKIP:
            add(stem, generated=False)
        for suf in HI_VERB_SUFFIXES:
            add(stem + suf, generated=True)
    for masc in HI_ADJ_MASC:
        add(masc, generated=False)
        add(masc[:-1] + "i", generated=True)
        add(masc[:-1] + "e", generated=True)

    # collapsed long-vowel variants of everything
    for w in sorted(words):
        v = w
        for long_vowel, short_vowel in VARIANT_MAP:
            v = v.replace(long_vowel, short_vowel)
        add(v, generated=True)
    return words


def write_list(path: pathlib.Path, words: set[str], label: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as out:
        out.write(f"# {label}\n")
        out.write("# generated by scripts/make_lexicons.py; edit that script, not this file\n")
        for w in sorted(words):
            out.write(w + "\n")
    print(f"{path}: {len(words)} forms")


def main() -> None:
    english = english_words()
    write_list(OUT_DIR / "english.txt", english, "English wordlist")
    write_list(OUT_DIR / "hindi_roman.txt", hindi_words(english), "romanized-Hindi wordlist")


if __name__ == "__main__":
    main()
