"""Generate tests/data/porter_pairs.tsv: a ~25k-word stemming fixture.

The vocabulary is synthesized to cover every rule path of the algorithm:
a broad set of English roots crossed with the full suffix inventory,
plus pattern words for the measure/cvc/double-consonant edge cases.
Expected stems come from the independent reference in porter_ref.py.
"""

import itertools
import os
import random

from porter_ref import PorterStemmer

ROOTS = """
abandon able absorb accept access accident account accuse ache achieve acid
act adapt add address adhere adjust admire admit adopt adore advance advise
affect afford agree aid aim air alarm alert align allow alter amaze amend
amuse analyze anchor anger angle announce annoy answer appeal appear apply
approve argue arise arm arrange arrest arrive ask assert assess assign
assist assume assure attach attack attempt attend attract audit avoid award
awake bake balance ban band bank bar bare bargain base bat bathe battle
beam bear beat beg begin behave believe belong bend benefit bet betray bid
bind bite blame blast blaze bleed blend bless blind block bloom blot blur
board boast boil bolt bomb bond book boost boot border bore borrow bounce
bound bow brace brag brake branch brand brave break breed brew bribe bridge
brief brighten bring broadcast browse bruise brush budge budget build bump
burn burst bury buzz calculate call calm camp cancel capture care carry
carve cast catch cater cause cease celebrate cement censor center chain
challenge chance change charge charm chase chat cheat check cheer chew
chill chip choke choose chop circle cite claim clap clarify clash clasp
clean clear click climb cling clip close clutch coach coast coat coax code
coil collect color comb combine come comfort command commend comment commit
compare compete compile complain complete compose compute conceal concede
conceive concern conclude condemn condition conduct confer confess confide
confirm conform confront confuse connect conquer consent consider consist
console constitute construct consult consume contact contain contend
contest continue contract contrast contribute control convene converse
convert convey convince cook cool cope copy correct cost cough count cover
crack craft crash crawl create credit creep crush cry cultivate cure curl
curve cut cycle damage dance dare dash date dazzle deal debate decay decide
declare decline decorate decrease dedicate deduce deem defeat defend defer
define deflect defy delay delegate delete deliver demand demonstrate denote
deny depart depend depict deplete deploy deposit deprive derive descend
describe deserve design desire destroy detach detail detect deter determine
develop deviate devise devote diagnose dial dictate differ digest dim
diminish dine dip direct disagree discern discharge disclose discount
discover discuss dismiss dispense displace display dispose dispute
dissolve distill distinguish distort distract distribute disturb dive
divert divide doubt draft drag drain draw dread dream drench dress drift
drill drink drip drive drop drown dry dump dwell earn ease eat echo edit
educate eject elect elevate eliminate embrace emerge emit employ enable
enact enclose encounter end endure enforce engage enhance enjoy enlarge
enlist enrich enroll ensure enter entertain entice entitle equal equip
erase erode err erupt escape escort establish esteem estimate evade
evaluate evoke evolve exact examine exceed excel exchange excite exclude
excuse execute exempt exert exhale exhaust exhibit exist expand expect
expel expend experiment expire explain explode explore export expose
express extend extract face fade fail faint fall falter fancy fasten fault
favor fear feast feature feed feel fetch fight figure file fill film
filter find fine finish fire fish fit fix flag flame flap flare flash
flatten flavor flee flex flick flinch fling flip float flock flood flop
flourish flow fly focus fold follow forbid force forecast forge forget
forgive form fortify forward foster found frame free freeze frighten frown
fuel fulfill function fund furnish fuse gain gamble gasp gather gaze
generate gesture give glance glare glide glow glue go govern grab grade
grant grasp greet grieve grind grip groan groom grow growl grumble
guarantee guard guess guide gush halt hand handle hang happen harden harm
harvest hatch hate haul haunt head heal heap hear heat heave help hide
hike hint hire hiss hit hold hone honor hook hop hope hover howl hug hum
hunt hurl hurry hurt hush identify ignite ignore illustrate imagine
imitate immerse impair impart implement imply import impose impress
improve include increase indicate induce indulge infer inflate inflict
inform inhale inherit inhibit initiate inject injure inquire insert insist
inspect inspire install instruct insult insure integrate intend intercept
interest interfere interpret interrupt intervene interview introduce
invade invent invest invite invoke involve iron isolate issue itch jam
jog join joke judge jump justify keep kick kill kiss knee kneel knit knock
know label lack land lash last laugh launch lay lead leak lean leap learn
lease leave lecture lend let level liberate lick lift light limit line
linger link list listen live load loan locate lock lodge long look loom
loosen lose love lower lunge lurk maintain make manage mandate manipulate
march mark market marry mask match mate matter mature measure meditate
meet melt mend mention merge mess migrate mind mingle minimize miss mix
moan mock modify monitor motivate mount mourn move mow multiply murmur
muse name narrate navigate need neglect negotiate nest nod nominate note
notice notify nourish number nurse obey object oblige observe obsess
obstruct obtain occupy occur offend offer officiate open operate oppose
opt order organize overcome overlap overlook overwhelm owe own pace pack
paint pair pant parade pardon park part pass paste pat patch pause pave
pay peck peel peer penetrate perceive perch perform permit persist
persuade phone pick picture pile pin pinch pitch place plan plant play
plead please pledge plot plow pluck plunge point poke polish pollute
ponder pop portray pose possess post postpone pour practice praise pray
preach precede predict prefer prepare prescribe present preserve preside
press presume pretend prevail prevent print probe proceed process
proclaim produce profess profit progress prohibit project promise promote
prompt pronounce propose protect protest prove provide provoke publish
pull pump punch punish purchase pursue push qualify quarrel question quit
quote race raid rain raise rally range rank rate rattle reach react read
realize reap rear reason rebel recall receive recite reckon recline
recognize recommend reconcile record recover recruit reduce refer refine
reflect reform refrain refresh refuse regard register regret regulate
rehearse reign reinforce reject rejoice relate relax release relieve rely
remain remark remedy remember remind remove render renew rent repair
repeal repeat replace reply report represent repress reproduce request
require rescue resemble resent reserve reside resign resist resolve
resort respect respond restore restrain restrict result resume retain
retire retreat retrieve return reveal reverse review revise revive revolt
reward rid ride ring rinse rise risk roam roar roast rob rock roll rot
rotate round rouse route rub ruin rule rumble run rush rust sail salute
sample sanction save saw say scan scar scare scatter schedule scold scoop
score scorn scout scramble scrape scratch scream screen screw scrub seal
search season seat secure see seek seem seize select sell send sense
separate serve set settle sever shade shake shape share sharpen shatter
shave shed shelter shift shine ship shiver shock shoot shop shout shove
show shred shriek shrink shrug shut shy sigh sign signal simmer simplify
sing sink sip sit size sketch skid skip slam slap slay sleep slice slide
slip slow smash smell smile smooth smother snap snatch sneak sniff snore
soak soar sob soften soothe sort sound sow spare spark speak specify
speed spell spend spill spin splash split spoil sponsor spot spray spread
spring sprinkle sprint squeeze stab stack stage stain stamp stand stare
start starve state stay steal steer stem step stick stimulate sting stir
stitch stock stoop stop store storm strain strand stray stretch stride
strike strip strive stroke stroll structure struggle study stuff stumble
stun submit subscribe subside substitute subtract succeed suck suffer
suggest suit summon supervise supply support suppose suppress surge
surpass surprise surrender surround survey survive suspect suspend
sustain swallow swap sway swear sweat sweep swell swim swing switch
symbolize sympathize tackle tailor take talk tame tap taste teach tear
tease tempt tend terminate test testify thank thaw think thrash thread
threaten thrill thrive throb throw thrust tick tickle tie tighten tilt
time tip tire toast tolerate toss touch tour tow trace track trade trail
train transfer transform translate transmit transport trap travel tread
treat tremble trick trigger trim trip triumph trot trouble trust try tuck
tug tumble tune turn twist type undergo underline undermine understand
undertake undo unfold unite unleash unload unlock unveil update upgrade
uphold upset urge use usher utilize utter value vanish vary venture verify
veto vibrate view violate visit voice vote vow wade wait wake walk wander
want warm warn wash waste watch water wave weaken wear weave weep weigh
welcome whip whisper whistle widen wield win wind wipe wish withdraw
withstand witness wonder work worry wrap wreck wrestle wring write yank
yawn yearn yell yield zoom
ability absence academy accent acre action activity actor adult advantage
adventure advice affair age agency agenda agent airport album alarm alley
alliance ally amount analysis ancestor angel animal ankle anniversary
announcement apartment apology apparatus appearance appetite apple
appliance appointment approach apron architect area arena argument arm
army arrow art article artist aspect assembly asset assistant asthma
athlete atmosphere atom attention attitude attorney audience author
authority autumn avenue average axis baby back bacteria badge bag bail
bait balance balcony ball balloon banana banner barrel barrier basement
basin basis basket bath battery bay beach bead beak bean beard beast
beauty bed bee beef beer beet beginning being bell belly belt bench berry
bicycle bill bin biology bird birth biscuit bishop bit blade blanket
blood blossom blouse body bone bonus border boss bottle bottom boulder
boundary bowl box boy brain brass bread breakfast breast breath breeze
brick bride brother brow bubble bucket buddy buffalo bug bulb bull bullet
bundle burden bureau bus bush business butter button cabin cabinet cable
cactus cage cake calendar camera canal candidate candle candy cannon
canoe canvas canyon cap capital captain car carbon card cargo carpet
carriage carrot cart cartoon case cash castle cat category cattle
ceiling cell cellar century ceremony certificate chair chalk chamber
champion channel chaos chapter character charity chart cheek cheese
chemical chemistry chest chicken chief child chin china chocolate choice
chord chorus church cigarette cinema circuit citizen city civilian clay
clerk client cliff climate clinic clock cloth cloud clown club clue
cluster coal coast coffee coin cold collar college colony column comedy
comfort committee community company compass concept concert conclusion
condition conference confidence conflict congress connection conscience
consequence constant contest context continent convention conversation
copper coral cord corn corner corporation corridor cottage cotton couch
council country county couple courage course court cousin cow crab cradle
craft crane crate crater cream creature crew cricket crime crisis
critic crop cross crowd crown crumb crust crystal cube culture cup
cupboard curiosity currency current curtain cushion custom customer
cycle dairy daisy dam damage danger data daughter dawn day deal dealer
death debris debt decade decision deck decoration deer defense deficit
degree delight delivery demand democracy demon dentist depth deputy
desert desk dessert destiny detail device devil diagram dialect diamond
diary dictionary diet dignity dilemma dinner dinosaur diploma direction
director dirt disaster discipline discovery disease dish disk distance
district ditch doctor document dog doll dollar dolphin domain donkey
donor door dose dot dozen draft dragon drama drawer drawing dress drill
driver drop drought drug drum duck duct duty dwarf eagle ear earth
earthquake east economy edge edition editor effect effort egg elbow
election element elephant elevator emergency emotion emperor empire
employee employer energy engine engineer enterprise enthusiasm entrance
entry envelope environment episode equation equipment era error essay
essence estate ethics evening event evidence evil exam example
excellence exception excess excuse exercise exhibition exile exit
expansion expense experience expert explanation explosion export
exposure expression extent eye fabric face fact factor factory faculty
failure faith family famine fan fantasy farm farmer fashion fat fate
father fatigue fault feather federation fee fence festival fever fiber
fiction field fig figure filament finance finger fire firm fish fist
flag flame flavor fleet flesh flight floor flour flower fluid foam fog
food fool foot force forehead forest fork form formula fort fortune
fossil foundation fountain fox fraction fragment frame fraud freedom
friend frog front frontier frost fruit fuel fun function fund funeral
fur furniture future galaxy gallery gallon game gang gap garage garden
garlic gas gate gear gem gender gene general generation genius gentleman
geography geology gesture ghost giant gift girl glacier glass glory
glove goal goat god gold golf goods goose gorilla gossip government
governor grace grade grain grammar grandmother granite grape grass
gravel gravity grief grocery ground group growth guard guardian guest
guidance guide guilt guitar gulf gum gun guy gym habit habitat hair
half hall hammer hand handful handle harbor hardware harm harmony
harvest hat hazard head health heap heart heat heaven heel height
helicopter hell helmet help hen herb heritage hero hill hint hip
historian history hobby hole holiday home homework honey hook horizon
horn horror horse hospital host hotel hour house household human humor
hunger hunter hut hybrid hydrogen hygiene ice icon idea identity
illness image imagination impact importance impression impulse incident
income independence index industry infant infection inflation influence
information ingredient initiative injury inn innocence input inquiry
insect insight inspector instance instinct institute instrument
insurance intellect intelligence intent interior interval interview
invasion invention inventory investment invitation iron island issue
item ivory jacket jail jar jaw jazz jealousy jeans jelly jewel job
joint joke journal journey joy judge judgment juice jungle junior jury
justice keyboard kidney king kingdom kitchen kite kitten knee knife
knight knob knot knowledge lab label labor ladder lady lake lamb lamp
land landscape lane language lantern lap laptop laser laughter laundry
law lawn lawyer layer leader leadership leaf league leather lecture leg
legacy legend lemon length lens leopard lesson letter level liberty
library license lid lifestyle lift light lightning lily limb lime limit
line linen lion lip liquid list literature litter liver lizard loaf
loan lobby lobster location lock log logic loop lord loss lot lottery
loyalty luck luggage lumber lunch lung luxury machine magazine magic
magnet maid mail majority male mall mammal man manager mandate manner
mansion manual map marble margin marine market marriage mask mass
master mat material mathematics matter mattress meadow meal meaning
meat mechanic medal media medicine melody member membrane memory menu
mercy mess message metal meter method middle midnight might migration
mile military milk mill mind mine mineral minister minority minute
miracle mirror mission mistake mixture mob mode model moisture moment
money monk monkey monster month mood moon morale morning mosque
mosquito mother motion motive motor mountain mouse mouth movement movie
mud mule muscle museum mushroom music mystery myth nail name nation
nature neck needle neighbor nephew nerve nest network news niece night
noise noon north nose note nothing notion novel nucleus nurse nut oak
obligation occasion ocean offer office officer oil onion opera opinion
opponent opportunity option orange orbit orchard orchestra organ
organism origin ornament orphan ostrich outcome outfit output oven
overall owl owner ox oxygen pace package page pain pair palace palm
pan panel panic paper parade parcel parent park parliament part
participant particle partner party passage passenger passion past
pasture path patience patient pattern pause peace peach peak peanut
pear pearl peasant pebble pen penalty pencil peninsula penny people
pepper percent perfection period permission person personality
perspective pest pet phase phenomenon philosophy photo photograph
phrase physician piano picture piece pig pile pill pillar pillow pilot
pin pine pipe pistol pit pitch pity pizza place plain plan plane planet
plant plastic plate platform pleasure plenty plot plumber pocket poem
poet poetry point poison pole police policy polish politics poll
pollution pond pony pool population porch port porter portion portrait
position possession possibility post pot potato poultry poverty powder
power practice prairie prayer precision predator preference pregnancy
presence president pressure prestige price pride priest prince
princess principle printer priority prison privacy privilege prize
problem procedure process procession product profession professor
profile profit program project promise proof property proportion
proposal prose prospect prosperity protein protest proverb province
provision psychology public publicity pulse pump pumpkin punch pupil
puppet puppy purpose purse puzzle pyramid quality quantity quarter
queen quest question quilt quota race rack radar radio rag rail railway
rain rainbow range rank ransom rat rate ratio ration razor reaction
reader reality realm rebellion receipt reception recipe recognition
recommendation region regret relation relationship relative relief
religion remains remark remedy rent repair reputation request rescue
research resident resistance resolution resource respect response
responsibility rest restaurant result retail revenge revenue review
revolution reward rhythm rib ribbon rice rider ridge rifle ring riot
risk ritual rival river road robe robot rock rocket rod role roof room
root rope rose route routine row rubber rug ruin rule rumor runner
rush sack saddle safety sail sailor saint salad salary sale salmon
salt sample sanctuary sand sandwich satellite sauce sausage scale
scandal scene scenery schedule scheme scholar school science scientist
scissors scope score scrap screen script sculpture sea seal season
seat second secret secretary section sector security seed segment
selection senate senator sense sentence sequence series sermon servant
service session shadow shaft shame shape shark sheep sheet shelf shell
shepherd shield shirt shock shoe shop shore shoulder show shower shrine
sibling side sign signature silence silk silver singer sink sir sister
site situation size skeleton skill skin skirt skull sky slave sleeve
slice slope smoke snail snake soap soccer society sock soil soldier
solution son song sorrow soul sound soup source south space spark
speaker spear species spectacle spectrum speech spell sphere spice
spider spine spirit sponge spoon sport spouse spring spy square
squirrel stable stadium staff stair stake stall stamp standard star
state statement station statue status steam steel stick stock stomach
stone store storm story stove stranger strategy straw stream street
strength stress string stroke structure student studio stuff style
subject substance suburb subway success suffering sugar suit summer
summit sun supper surface surgeon surgery surplus survey suspicion
swamp sweater symbol sympathy symptom system table tail tailor talent
tank tape target task taste tax taxi tea teacher team tear technique
technology teen telephone telescope television temper temperature
temple tenant tendency tennis tent term terrace territory terror text
texture theater theme theory therapy thief thing thought thread threat
throat throne thumb thunder ticket tide tiger timber tin tip tissue
title toast tobacco toe toilet tomato tomb ton tone tongue tool tooth
topic torch tornado tower town toy trace track tractor tradition
traffic tragedy trail train traitor transition trap trash treasure
treaty tree trend trial triangle tribe tribute trick trip troop trophy
trouble truck trumpet trunk truth tube tunnel turkey turtle tutor twig
twin uncle uniform union unit unity universe university upper urgency
usage utility vacation valley value van vapor variety vein velvet
vendor verse version vessel veteran victim victory video village
vinegar violence virtue virus vision visitor vitamin voice volcano
volume volunteer voyage wage wagon waist wall wallet walnut war
warehouse warmth warrior watch water wave wax wealth weapon weather
web wedding weed week weekend weight west whale wheat wheel whisker
widow width wife wilderness wind window wine wing winner winter wire
wisdom wish wolf woman wood wool word worker workshop world worm worry
worship wound wrist zone
able absolute abstract absurd abundant active actual acute adequate
adverse afraid aggressive agile alien alike alive ambitious ample
ancient angry annual anonymous anxious apparent appropriate apt arbitrary
arrogant artificial ashamed asleep automatic available average awake
aware awful awkward bald bare basic beautiful bitter bizarre blank
blind blond blue bold brave brief bright brilliant broad broken brown
brutal busy calm capable careful careless casual cautious certain
cheap cheerful chronic civil classic clean clear clever cloudy clumsy
coarse cold colonial comfortable common compact competent complete
complex comprehensive concrete confident conscious conservative
considerable consistent constant contemporary content continuous
convenient cool cordial corrupt costly crazy crisp critical crucial
crude cruel curious current cute daily damp dangerous dark dead deaf
dear decent deep defensive delicate delicious dense dependent desperate
different difficult dim diplomatic dirty distant distinct diverse divine
dizzy domestic dominant double dramatic dry dual dull dumb durable
dynamic eager early earnest easy economic effective efficient elaborate
elderly electric elegant eligible eloquent empty enormous entire equal
equivalent essential eternal ethical evident exact excellent exclusive
exotic expensive explicit express extinct extreme faint fair faithful
false familiar famous fancy fast fatal feasible federal feeble fellow
female fertile fierce final fine firm fiscal fit flat flexible fluent
fond foreign formal fortunate fragile frank free frequent fresh friendly
full fundamental funny furious future gay generous gentle genuine
gigantic glad global golden good gorgeous gradual grand grave gray
great greedy green grim gross guilty handsome handy happy hard harsh
healthy heavy hidden high hollow holy honest horizontal hostile hot
huge humble hungry hurt ideal identical idle ill illegal immediate
immense immune implicit important impossible incredible indifferent
indirect inevitable inferior infinite influential informal inherent
initial innocent intact intense interior intermediate internal intimate
invisible inward jealous joint jolly junior just keen kind large late
latent lateral lazy lean legal legitimate lethal liable liberal light
like likely limited linear liquid literal little lively local logical
lonely loose loud low loyal lucky mad magnetic main major male mature
mean medical medium meek mental mere messy mild minor minute miserable
mobile moderate modern modest moist moral mortal motor multiple mutual
naive naked narrow nasty native natural naval near neat negative
nervous neutral new nice noble normal notable nuclear numerous obscure
obvious odd official old open optimistic oral organic original other
outdoor outer outstanding oval overseas painful pale parallel partial
particular passive past patient peculiar perfect permanent persistent
personal physical plain plausible pleasant plural polite political
poor popular portable positive possible potent powerful practical
precious precise pregnant premature previous primary prime primitive
principal prior private probable productive professional profound
prominent prompt prone proper proud prudent public punctual pure
purple quaint quick quiet radical random rapid rare rational raw ready
real realistic reasonable recent reckless red regular relevant reliable
reluctant remarkable remote resistant respective rich ridiculous rigid
ripe robust rough round royal rude rural sacred sad safe salty same
sane scarce secret secular secure selective senior sensible sensitive
serious severe shallow sharp sheer short shrewd shy sick silent silly
similar simple sincere single skeptical slender slight slim slow small
smart smooth snug sober social soft solar sole solemn solid solitary
sore sorry sound sour spare sparse special specific spectacular
spiritual splendid spontaneous stable stale static steady steep sterile
stiff still strange strategic strict strong stubborn subsequent subtle
sudden sufficient suitable sunny superb superficial superior supreme
sure suspicious sweet swift tall tame technical tedious temporary tense
terrible thick thin thirsty thorough tidy tight tiny tired tolerant
total tough toxic tragic tranquil transparent tremendous trivial
tropical true typical ugly ultimate unable uncertain uncomfortable
underground uneasy unfair unique universal unknown unlikely unusual
upright upset urban urgent useful useless usual utter vacant vague
vain valid valuable vast verbal vertical viable vicious vigorous
violent virtual visible visual vital vivid vocal voluntary vulnerable
warm weak weary weird wet white whole wicked wide wild willing wise
witty wonderful wooden worth worthy wrong young
""".split()

SUFFIXES = """
s es ies ed ing ness ly ful less ment ments ation ations ization izations
ize izes ized izing al ally ality alities ance ence ant ent ive ively
iveness ous ously ousness ise iser izer ation ator ators ism isms ity
ities able ible ably ibly er ers est ic ical ically icate icative ion ions
sion tion tional ational enci anci eli entli ousli alli bli logi iciti
aliti iviti biliti alism fulness
""".split()

PATTERN_WORDS = """
sky by cry fly dry try ply shy spy why my be do go ox ax it at on in is
as us am an ebb add odd egg inn err ill off ass fuzz buzz jazz fizz
ies sses eed ing ed ion ions io ould yies ssesies
mitt putt watt yy yyy xyz zzz aaa eee iii ooo uuu ayay oyoy eyey
toy boy joy key day say way buy guy law saw raw new few dew hue cue
die lie tie vie doe foe hoe toe woe due sue rue
agreed agrees agree feed bleed breed creed deed exceed freed greed
heed indeed need proceed reed seed speed succeed tweed weed
bed fed led red wed shed sled sped bred fled
bated mated gated hated dated fated rated sated abated belated
hopping hoping mopping moping tapping taping pinned dined sinned
fitted fated betted batted potted noted rotted rotated
controlled controlling patrolled enrolled extolled annulled
falling filling fulling hulling galling stalling walling
hissing kissing missing passing pressing crossing blessing
fizzed whizzed quizzed buzzed jazzed
conflated inflated deflated related elated
troubled doubled crumbled humbled mumbled tumbled stumbled
sized seized prized dozed gazed blazed glazed grazed
happy snappy floppy sloppy choppy sleepy weepy creepy
pony ponies tony crony irony agony ebony colony felony
caress caresses harness harnesses witness witnesses
abyss amiss bliss chess class cross dress gloss grass guess kiss miss
press bass mass moss loss toss fuss muss pass lass
ties lies dies pies cries flies tries spies skies plies
cats dogs runs cuts bats bits pots nets tips taps tops
relational conditional rational irrational national optional regional
emotional functional intentional notional devotional promotional
valenci hesitanci agenci decenci urgenci frequenci currenci tendenci
digitizer organizer recognizer synthesizer appetizer equalizer
vileli freeli nobli feebli terribli horribli possibli incredibli
analogousli famousli nervousli jealousli zealousli
vietnamization organization civilization colonization modernization
urbanization globalization normalization realization legalization
predication medication dedication indication vindication syndication
operator generator narrator spectator dictator educator incubator
feudalism socialism capitalism nationalism regionalism journalism
decisiveness massiveness passiveness submissiveness expressiveness
hopefulness carefulness usefulness gratefulness thankfulness
callousness nervousness seriousness consciousness spaciousness
formaliti brutaliti legaliti mentaliti morbiditi rapiditi cupiditi
sensitiviti activiti captiviti festiviti nativiti productiviti
sensibiliti possibiliti credibiliti flexibiliti mobiliti nobiliti
triplicate duplicate implicate explicate supplicate replicate
formative informative normative creative negative curative talkative
formalize normalize legalize vitalize moralize equalize vocalize
electriciti simpliciti compliciti dupliciti authenticiti elasticiti
electrical chemical mechanical identical economical theatrical
hopeful useful careful grateful tactful watchful dreadful
goodness darkness weakness boldness kindness blindness coolness
revival arrival approval removal survival denial burial refusal
allowance annoyance clearance acceptance resistance assistance
inference conference reference preference occurrence deterrence
airliner mariner examiner determiner partitioner practitioner
gyroscopic telescopic microscopic philosophic scientific specific
adjustable adaptable acceptable comfortable predictable profitable
defensible sensible possible credible flexible eligible
irritant assistant consultant important pollutant accountant
replacement advertisement astonishment establishment announcement
adjustment involvement treatment department commitment argument
dependent different excellent sufficient convenient permanent
adoption caption option mention attention invention convention
homologou analogou ambiguou continuou contiguou
communism organism criticism skepticism romanticism mechanism
activate motivate cultivate elevate aggravate renovate innovate
angulariti populariti similariti regulariti peculiariti familiariti
homologous analogous ambiguous continuous viscous monstrous
effective objective subjective collective defective detective
bowdlerize computerize categorize memorize authorize theorize
probate debate rebate mandate update estate ornate innate
rate late gate fate mate date hate ceas cease decease release increase
controll roll toll tall tell bell doll dull full gull hull lull mull
null pall poll pull wall well will
oscillate oscillator oscillators vacillate scintillate
university universities universe universal diversity adversity
curiosity generosity animosity velocity ferocity atrocity
analysis analyses basis bases crisis crises thesis theses
conditions diseases autoimmune generalized treatment treatments
vitiligo fibromyalgia psoriasis melanocytes depigmentation
repigmentation phototherapy dermatology autoimmunity inflammation
chronically clinically systematically dramatically automatically
""".split()


def synth_cv_words(rng, n):
    """Random consonant/vowel pattern words to probe measure boundaries."""
    cons = "bcdfghjklmnpqrstvwxz"
    vows = "aeiouy"
    out = []
    for _ in range(n):
        length = rng.randint(2, 12)
        w = []
        for i in range(length):
            pool = vows if rng.random() < 0.42 else cons
            w.append(rng.choice(pool))
        out.append("".join(w))
    return out


def main():
    rng = random.Random(20240817)
    words = set()
    words.update(ROOTS)
    words.update(PATTERN_WORDS)
    for root in ROOTS:
        for suf in rng.sample(SUFFIXES, 24):
            words.add(root + suf)
    words.update(synth_cv_words(rng, 4000))
    words = sorted(w for w in words if w.isalpha() and w.isascii())

    ps = PorterStemmer()
    out_path = os.path.join(
        os.path.dirname(__file__), "..", "tests", "data", "porter_pairs.tsv"
    )
    with open(out_path, "w") as fh:
        for w in words:
            fh.write(f"{w}\t{ps.stem(w)}\n")
    print(f"wrote {len(words)} pairs to {out_path}")


if __name__ == "__main__":
    main()
