#ifndef TERMFORGE_LEXICON_HPP
#define TERMFORGE_LEXICON_HPP

#include <sstream>
#include <string>
#include <unordered_set>

namespace termforge {

// Default English lexicon for the language filter: high-frequency function
// words, common verbs with their inflected forms, and everyday nouns and
// adjectives. The filter only needs to recognize runs of ordinary words,
// so coverage of rare vocabulary is deliberately not a goal.
inline const char* kDefaultLexicon = R"lex(
a abandon ability able about above absence absolute absorb abstract
absurd abundant academy accent accept accepted accepting accepts access
accident account accuse ache achieve acid acre act action active
activity actor actual acute adapt add added adding address adds adequate
adhere adjust admire admit adopt adore adult advance advantage adventure
adverse advice advise affair affect affected affecting affects afford
afraid after again against age agency agenda agent aggressive agile
agree aid aim air airport airs alarm album alert alien align alike alive
all alley alliance allow allowed allowing allows ally also alter
although am amaze ambitious amend amount ample amuse an analysis analyze
ancestor anchor ancient and angel anger angle angry animal ankle
anniversary announce announcement annoy annual anonymous answer answers
anxious any apartment apology apparatus apparent appeal appear
appearance appeared appearing appears appetite apple appliance apply
appointment approach appropriate approve apron apt arbitrary architect
are area areas arena arent argue argument arise arm army arrange arrest
arrive arrogant arrow art article articles artificial artist as ashamed
ask asked asking asks asleep aspect assembly assert assess asset assign
assist assistant assume assure asthma at ate athlete atmosphere atom
attach attack attempt attend attention attitude attorney attract
audience audit author authority automatic autumn available avenue
average avoid avoided avoiding avoids awake award aware awful awkward
axis baby back bacteria badge bag bail bait bake balance balcony bald
ball balloon ban banana band bank banner bar bare bargain barrel barrier
base basement basic basin basis basket bat bath bathe battery battle bay
be beach bead beak beam bean bear beard beast beat beautiful beauty
became because becomes becoming bed bee beef been beer beet before beg
began begin beginning begins begun behave being believe believed
believes believing bell belly belong below belt bench bend benefit berry
bet betray between bicycle bid bill bin bind biology bird birth biscuit
bishop bit bite bitter bizarre blade blame blank blanket blast blaze
bleed blend bless blind block blond blood bloods bloom blossom blot
blouse blue blur board boast bodies body boil bold bolt bomb bond bone
bonus book books boost boot border bore borrow boss both bottle bottom
bought boulder bounce bound boundary bow bowl box boy brace brag brain
brake branch brand brass brave bread break breakfast breaking breaks
breast breath breed breeze brew bribe brick bride bridge brief bright
brighten brilliant bring bringing brings broad broadcast broke broken
brother brought brow brown browse bruise brush brutal bubble bucket
buddy budge budget buffalo bug build building builds built bulb bull
bullet bump bundle burden bureau burn burst bury bus bush business busy
but butter button buying buys buzz by cabin cabinet cable cactus cage
cake calculate calendar call called calling calls calm came camera camp
can canal cancel candidate candle candy cannon canoe cant canvas canyon
cap capable capital captain capture car carbon card care careful
careless cares cargo carpet carriage carried carries carrot carry
carrying cart cartoon carve case cases cash cast castle casual cat catch
catches catching category cater cats cattle caught cause caused causes
causing cautious cease ceiling celebrate cell cellar cells cement censor
center century ceremony certain certificate chain chair chairs chalk
challenge chamber champion chance change changed changes changing
channel chaos chapter character charge charity charm chart chase chat
cheap cheat check checked checking checks cheek cheer cheerful cheese
chemical chemistry chest chew chicken chief child children childs chill
chin china chip chocolate choice choke choose chooses choosing chop
chord chorus chose chosen chronic church cigarette cinema circle circuit
cite cities citizen city civil civilian claim clap clarify clash clasp
classic clay clean clear clerk clever click client cliff climate climb
cling clinic clip clock close cloth cloud cloudy clown club clue clumsy
cluster clutch coach coal coarse coast coat coax code coffee coil coin
cold collar collect college colonial colony color colors column comb
combine come comedy comes comfort comfortable coming command commend
comment commit committee common community compact companies company
compare compass compete competent compile complain complete complex
compose comprehensive compute conceal concede conceive concept concern
concert conclude conclusion concrete condemn condition conditions
conduct confer conference confess confide confidence confident confirm
conflict conform confront confuse congress connect connection conquer
conscience conscious consent consequence conservative consider
considerable considered considering considers consist consistent console
constant constitute construct consult consume contact contain contained
containing contains contemporary contend content contest context
continent continue continued continues continuing continuous contract
contrast contribute control convene convenient convention conversation
converse convert convey convince cook cool cope copper copy coral cord
cordial corn corner corporation correct corridor corrupt cost costly
cottage cotton couch cough could couldnt council count countries country
county couple courage course courses court cousin cover coverred
coverring covers cow crab crack cradle craft crane crash crate crater
crawl crazy cream create created creates creating creature credit creep
crew cricket crime crisis crisp critic critical crop cross crowd crown
crucial crude cruel crumb crush crust cry crystal cube cultivate culture
cup cupboard cure curiosity curious curl currency current curtain curve
cushion custom customer cut cute cuts cutting cycle daily dairy daisy
dam damage damp dance danger dangerous dare dark dash data date daughter
dawn day days dazzle dead deaf deal dealer dear death debate debris debt
decade decay decent decide decided decides deciding decision deck
declare decline decorate decoration decrease dedicate deduce deem deep
deer defeat defend defense defensive defer deficit define deflect defy
degree delay delegate delete delicate delicious delight deliver delivery
demand democracy demon demonstrate denote dense dentist deny depart
depend depended dependent depending depends depict deplete deploy
deposit deprive depth deputy derive descend describe described describes
describing desert deserve design desire desk desperate dessert destiny
destroy detach detail detect deter determine develop developed
developing develops deviate device devil devise devote diagnose diagram
dial dialect diamond diary dictate dictionary did didnt died dies diet
differ different difficult digest dignity dilemma dim diminish dine
dinner dinosaur dip diploma diplomatic direct direction director dirt
dirty disagree disaster discern discharge discipline disclose discount
discover discovery discuss disease diseases dish disk dismiss dispense
displace display dispose dispute dissolve distance distant distill
distinct distinguish distort distract distribute district disturb ditch
dive diverse divert divide divine dizzy do doctor doctors document does
doesnt dog dogs doll dollar dolphin domain domestic dominant done donkey
donor dont door doors dose dot double doubt down dozen draft drag dragon
drain drama dramatic drank draw drawer drawing drawn draws dread dream
drench dress drew drift drill drink drinking drinks drip drive driven
driver drives driving drop drought drove drown drug drugs drum drunk dry
dual duck duct dull dumb dump durable during duty dwarf dwell dying
dynamic each eager eagle ear early earn earnest earth earthquake ease
east easy eat eaten eating eats echo economic economy edge edit edition
editor educate effect effective effects efficient effort egg eight
either eject elaborate elbow elderly elect election electric elegant
element elephant elevate elevator eligible eliminate eloquent else
embrace emerge emergency emit emotion emperor empire employ employee
employer empty enable enact enclose encounter end endure energy enforce
engage engine engineer enhance enjoy enlarge enlist enormous enrich
enroll ensure enter enterprise entertain enthusiasm entice entire
entitle entrance entry envelope environment episode equal equation equip
equipment equivalent era erase erode err error erupt escape escort essay
essence essential establish estate esteem estimate eternal ethical
ethics evade evaluate even evening event every evidence evident evil
evoke evolve exact exam examine example examples exceed excel excellence
excellent exception excess exchange excite exclude exclusive excuse
execute exempt exercise exert exhale exhaust exhibit exhibition exile
exist exit exotic expand expansion expect expected expecting expects
expel expend expense expensive experience experiment expert expire
explain explained explaining explains explanation explicit explode
explore explosion export expose exposure express expression extend
extent extinct extract extreme eye eyes fabric face faces fact factor
factory facts faculty fade fail failure faint fair faith faithful fall
fallen falling falls false falter familiar families family famine famous
fan fancy fantasy farm farmer fashion fast fasten fat fatal fate father
fatigue fault favor fear feasible feast feather feature federal
federation fee feeble feed feel feeling feels feet fell fellow felt
female fence fertile festival fetch fever few fiber fiction field fierce
fig fight fighting fights figure filament file fill film filter final
finance find finding finds fine finger finish fire firm first fiscal
fish fist fit five fix flag flame flap flare flash flat flatten flavor
flee fleet flesh flew flex flexible flick flies flight flinch fling flip
float flock flood floor floors flop flour flourish flow flower flown
fluent fluid fly flying foam focus fog fold follow followed following
follows fond food foods fool foot for forbid force forecast forehead
foreign forest forge forget forgive fork form formal forms formula fort
fortify fortunate fortune forward fossil foster fought found foundation
fountain four fox fraction fragile fragment frame frank fraud free
freedom freeze frequent fresh friend friendly friends frighten frog from
front frontier frost frown fruit fuel fulfill full fun function fund
fundamental funeral funny fur furious furnish furniture further fuse
future gain galaxy gallery gallon gamble game gang gap garage garden
garlic gas gasp gate gather gave gay gaze gear gem gender gene general
generate generation generous genius gentle gentleman genuine geography
geology gesture gets getting ghost giant gift gigantic girl give given
gives giving glacier glad glance glare glass glide global glory glove
glow glue go goal goat god goes going gold golden golf gone good goods
goose gorgeous gorilla gossip got gotten govern government governor grab
grace grade gradual grain grammar grand grandmother granite grant grape
grasp grass grave gravel gravity gray great greedy green greet grew
grief grieve grim grind grip groan grocery groom gross ground group
groups grow growing growl grown grows growth grumble guarantee guard
guardian guess guest guidance guide guilt guilty guitar gulf gum gun
gush guy gym habit habitat had hadnt hair half hall halt hammer hand
handful handle hands handsome handy hang happen happened happening
happens happy harbor hard harden hardware harm harmony harsh harvest has
hasnt hat hatch hate haul haunt have havent having hazard he head heads
heal health healths healthy heap hear heard hearing hears heart hearts
heat heave heaven heavy heel height held helicopter hell helmet help
helped helping helps hen her herb here heritage hero hers herself hes
hidden hide high hike hill him himself hint hip hire his hiss historian
history hit hobby hold holding holds hole holiday hollow holy home homes
homework hone honest honey honor hook hop hope horizon horizontal horn
horror horse hospital host hostile hot hotel hour hours house household
houses hover how howl hug huge hum human humble humor hunger hungry hunt
hunter hurl hurry hurt hush hut hybrid hydrogen hygiene i ice icon id
idea ideal ideas identical identify identity idle if ignite ignore ill
illegal illness illustrate im image imagination imagine imitate
immediate immense immerse immune impact impair impart implement implicit
imply import importance important impose impossible impress impression
improve improved improves improving impulse in incident include included
includes including income increase increased increases increasing
incredible independence index indicate indifferent indirect induce
indulge industry inevitable infant infection infer inferior infinite
inflate inflation inflict influence influential inform informal
information informations ingredient inhale inherent inherit inhibit
initial initiate initiative inject injure injury inn innocence innocent
input inquire inquiry insect insert insight insist inspect inspector
inspire install instance instinct institute instruct instrument insult
insurance insure intact integrate intellect intelligence intend intense
intent intercept interest interfere interior intermediate internal
interpret interrupt interval intervene interview intimate into introduce
invade invasion invent invention inventory invest investment invisible
invitation invite invoke involve involved involves involving inward iron
is island isnt isolate issue it itch item its itself ive ivory jacket
jail jam jar jaw jazz jealous jealousy jeans jelly jewel job jobs jog
join joint joke jolly journal journey joy judge judgment juice jump
jungle junior jury just justice justify keen keep keeping keeps kept
keyboard kick kidney kill killed killing kills kind kinds king kingdom
kiss kitchen kite kitten knee kneel knew knife knight knit knob knock
knot know knowing knowledge known knows lab label labor lack ladder lady
laid lain lake lamb lamp land landscape lane language lantern lap laptop
large laser lash last late latent lateral laugh laughter launch laundry
law lawn lawyer lay layer laying lays lazy lead leaded leader leadership
leading leads leaf league leak lean leap learn learned learning learns
lease leather leave leaves leaving lecture led left leg legacy legal
legend legitimate lemon lend length lens leopard lesson let lethal lets
letter letting level levels liable liberal liberate liberty library
license lick lid lies life lifes lifestyle lift light lightning lights
like likely lily limb lime limit limited line linear linen lines linger
link lion lip liquid list listen lists literal literature litter little
live lived lively liver lives living lizard load loaf loan lobby lobster
local locate location lock lodge log logic logical lonely long look
looked looking looks loom loop loose loosen lord lose loses losing loss
lost lot lottery loud love low lower loyal loyalty luck lucky luggage
lumber lunch lung lunge lurk luxury lying machine mad made magazine
magic magnet magnetic maid mail main maintain major majority make makes
making male mall mammal man manage manager mandate manipulate manner
mans mansion manual many map marble march margin marine mark market
markets marriage marry mask mass master mat match mate material
mathematics matter mattress mature may me meadow meal mean meaning means
meant measure meat mechanic medal media medical medicine medicines
meditate medium meek meet meeting meets melody melt member membrane
memory men mend mental mention menu mercy mere merge mess message messy
met metal meter method mice middle midnight might migrate migration mild
mile military milk mill mind mine mineral mingle minimize minister minor
minority minute miracle mirror miserable miss mission mistake mix
mixture moan mob mobile mock mode model moderate modern modest modify
moist moisture moment money moneys monitor monk monkey monster month
months mood moon moral morale more morning mortal mosque mosquito most
mother motion motivate motive motor mount mountain mourn mouse mouth
move moved movement moves movie moving mow much mud mule multiple
multiply murmur muscle muse museum mushroom music must mutual my myself
mystery myth nail naive naked name names narrate narrow nasty nation
native natural nature naval navigate near neat neck need needed needing
needle needs negative neglect negotiate neighbor neither nephew nerve
nervous nest network neutral new news next nice niece night nights nine
no noble nod noise nominate noon nor normal north nose not notable note
nothing notice noticed notices noticing notify notion nourish novel
nuclear nucleus number numbers numerous nurse nut oak obey object
obligation oblige obscure observe obsess obstruct obtain obvious
occasion occupy occur occurred occurring occurs ocean odd of off offend
offer offered offering offers office officer official officiate oil old
on once one onion only open opened opening opens opera operate opinion
opponent opportunity oppose opt optimistic option or oral orange orbit
orchard orchestra order orders organ organic organism organize origin
original ornament orphan ostrich other our ours ourselves out outcome
outdoor outer outfit output outstanding oval oven over overall overcome
overlap overlook overseas overwhelm owe owl own owner ox oxygen pace
pack package page pages paid pain painful pains paint pair palace pale
palm pan panel panic pant paper papers parade parallel parcel pardon
parent park parliament part partial participant particle particular
partner parts party pass passage passed passenger passes passing passion
passive past paste pasture pat patch path patience patient patients
pattern pause pave pay paying pays peace peach peak peanut pear pearl
peasant pebble peck peculiar peel peer pen penalty pencil penetrate
peninsula penny people pepper perceive percent perch perfect perfection
perform period permanent permission permit persist persistent person
personal personality persons perspective persuade pest pet phase
phenomenon philosophy phone photo photograph phrase physical physician
piano pick picture piece pig pile pill pillar pillow pilot pin pinch
pine pipe pistol pit pitch pity pizza place places plain plan plane
planet plant plastic plate platform plausible play played playing plays
plead pleasant please pleasure pledge plenty plot plow pluck plumber
plunge plural pocket poem poet poetry point points poison poke pole
police policy polish polite political politics poll pollute pollution
pond ponder pony pool poor pop popular population porch port portable
porter portion portrait portray pose position positive possess
possession possibility possible post postpone pot potato potent poultry
pour poverty powder power powerful powers practical practice prairie
praise pray prayer preach precede precious precise precision predator
predict prefer preference pregnancy pregnant premature prepare prescribe
presence present preserve preside president press pressure prestige
presume pretend prevail prevent prevented preventing prevents previous
price pride priest primary prime primitive prince princess principal
principle print printer prior priority prison privacy private privilege
prize probable probe problem problems procedure proceed process
procession proclaim produce produced produces producing product
productive profess profession professional professor profile profit
profound program programs progress prohibit project prominent promise
promote prompt prone pronounce proof proper property proportion proposal
propose prose prospect prosperity protect protected protecting protects
protein protest proud prove proverb provide provided provides providing
province provision provoke prudent psychology public publicity publish
pull pulled pulling pulls pulse pump pumpkin punch punctual punish pupil
puppet puppy purchase pure purple purpose purse pursue push put puts
putting puzzle pyramid quaint qualify quality quantity quarrel quarter
queen quest question questions quick quiet quilt quit quota quote race
rack radar radical radio rag raid rail railway rain rainbow raise raised
raises raising rally ran random range rank ransom rapid rare rat rate
ratio ration rational rattle raw razor reach reached reaches reaching
react reaction read reader reading reads ready real realistic reality
realize realm reap rear reason reasonable reasons rebel rebellion recall
receipt receive received receives receiving recent reception recipe
recite reckless reckon recline recognition recognize recommend
recommendation reconcile record recover recruit red reduce reduced
reduces reducing refer refine reflect reform refrain refresh refuse
regard region register regret regular regulate rehearse reign reinforce
reject rejoice relate relation relationship relative relax release
relevant reliable relief relieve religion reluctant rely remain remained
remaining remains remark remarkable remedy remember remembered
remembering remembers remind remote remove removed removes removing
render renew rent repair repeal repeat replace reply report reported
reporting reports represent repress reproduce reputation request require
required requires requiring rescue research researches resemble resent
reserve reside resident resign resist resistance resistant resolution
resolve resort resource respect respective respond response
responsibility rest restaurant restore restrain restrict result resulted
resulting results resume retail retain retire retreat retrieve return
reveal revenge revenue reverse review revise revive revolt revolution
reward rhythm rib ribbon rice rich rid ride rider ridge ridiculous rifle
rigid ring rinse riot ripe rise risen rises rising risk ritual rival
river road roads roam roar roast rob robe robot robust rock rocket rod
role roll roof room rooms root rope rose rot rotate rough round rouse
route routine row royal rub rubber rude rug ruin rule rumble rumor run
runner running runs rural rush rust sack sacred sad saddle safe safety
said sail sailor saint salad salary sale salmon salt salty salute same
sample sanction sanctuary sand sandwich sane sang sat satellite sauce
sausage save saw say saying says scale scan scandal scar scarce scare
scatter scene scenery schedule scheme scholar school schools science
scientist scissors scold scoop scope score scorn scout scramble scrap
scrape scratch scream screen screw script scrub sculpture sea seal
search season seat second secret secretary section sector secular secure
security see seed seeing seek seeking seeks seem seemed seeming seems
seen sees segment seize select selection selective sell selling sells
senate senator send sending sends senior sense sensible sensitive sent
sentence separate sequence series serious sermon servant serve served
serves service services serving session set sets setting settle seven
sever severe shade shadow shaft shake shall shallow shame shape share
shared shares sharing shark sharp sharpen shatter shave she shed sheep
sheer sheet shelf shell shelter shepherd shes shield shift shine ship
shirt shiver shock shoe shoot shop shore short should shoulder shouldnt
shout shove show showed shower showing shown shows shred shrewd shriek
shrine shrink shrug shut shy sibling sick side sides sigh sign signal
signature silence silent silk silly silver similar simmer simple
simplify since sincere sing singer singing single sings sink sip sir
sister sit site sites sits sitting situation six size skeleton skeptical
sketch skid skill skin skins skip skirt skull sky slam slap slave slay
sleep sleeping sleeps sleeve slender slept slice slide slight slim slip
slope slow small smart smash smell smile smoke smooth smother snail
snake snap snatch sneak sniff snore snug so soak soap soar sob sober
soccer social society sock soft soften soil solar sold soldier sole
solemn solid solitary solution some son song soothe sore sorrow sorry
sort sought soul sound soup sour source south sow space spare spark
sparse speak speaker speaking speaks spear special species specific
specify spectacle spectacular spectrum speech speed spell spend spending
spends spent sphere spice spider spill spin spine spirit spiritual
splash splendid split spoil spoke spoken sponge sponsor spontaneous
spoon sport spot spouse spray spread spreaded spreading spreads spring
sprinkle sprint spy square squeeze squirrel stab stable stack stadium
staff stage stain stair stake stale stall stamp stand standard standing
stands star stare start started starting starts starve state statement
states static station statue status stay stayed staying stays steady
steal steam steel steep steer stem step sterile stick stiff still
stimulate sting stir stitch stock stomach stone stood stoop stop stopped
stopping stops store stories storm story stove strain strand strange
stranger strategic strategy straw stray stream street streets strength
stress stretch strict stride strike strikes striking string strip strive
stroke stroll strong struck structure struggle stubborn student students
studies studio study stuff stumble stun style subject submit subscribe
subsequent subside substance substitute subtle subtract suburb subway
succeed success such suck sudden suffer suffered suffering suffers
sufficient sugar suggest suggested suggesting suggests suit suitable
summer summit summon sun sung sunny superb superficial superior
supervise supper supply support supported supporting supports suppose
suppress supreme sure surface surge surgeon surgery surpass surplus
surprise surrender surround survey survive suspect suspend suspicion
suspicious sustain swallow swam swamp swap sway swear sweat sweater
sweep sweet swell swift swim swimming swims swing switch symbol
symbolize sympathize sympathy symptom symptoms system systems table
tables tackle tail tailor take taken takes taking talent talk talked
talking talks tall tame tank tap tape target task taste taught tax taxi
tea teach teacher teaches teaching team tear tease technical technique
technology tedious teen teeth telephone telescope television telling
tells temper temperature temple temporary tempt ten tenant tend tendency
tennis tense tent term terminate terrace terrible territory terror test
testify tests text texture than thank that thats thaw the theater their
theirs them theme themselves then theory therapies therapy there these
they theyll theyre theyve thick thief thin thing things think thinking
thinks third thirsty this thorough those though thought thrash thread
threat threaten three threw thrill thrive throat throb throne through
throw throwing thrown throws thrust thumb thunder tick ticket tickle
tide tidy tie tiger tight tighten tilt timber time times tin tiny tip
tire tired tissue title to toast tobacco toe toilet told tolerant
tolerate tomato tomb ton tone tongue too took tool tooth topic torch
tornado toss total touch touched touches touching tough tour tow tower
town toxic toy trace track tractor trade tradition traffic tragedy
tragic trail train traitor tranquil transfer transform transition
translate transmit transparent transport trap trash travel tread
treasure treat treated treating treatment treatments treats treaty tree
tremble tremendous trend trial triangle tribe tribute trick tried tries
trigger trim trip triumph trivial troop trophy tropical trot trouble
truck true trumpet trunk trust truth try trying tube tuck tug tumble
tune tunnel turkey turn turned turning turns turtle tutor twig twin
twist two type types typical ugly ultimate unable uncertain uncle
uncomfortable under undergo underground underline undermine understand
understanding understands understood undertake undo uneasy unfair unfold
uniform union unique unit unite unity universal universe university
unknown unleash unless unlikely unload unlock until unusual unveil up
update upgrade uphold upper upright upset urban urge urgency urgent us
usage use used useful useless uses usher using usual utility utilize
utter vacant vacation vague vain valid valley valuable value van vanish
vapor variety vary vast vein velvet vendor venture verbal verify verse
version vertical very vessel veteran veto viable vibrate vicious victim
victory video view vigorous village vinegar violate violence violent
virtual virtue virus visible vision visit visitor visits visitted
visitting visual vital vitamin vivid vocal voice volcano volume
voluntary volunteer vote vow voyage vulnerable wade wage wagon waist
wait waited waiting waits wake walk walked walking walks wall wallet
walls walnut wander want wanted wanting wants war warehouse warm warmth
warn warrior was wash washed washes washing wasnt waste watch watched
watches watching water waters wave wax ways we weak weaken wealth weapon
wear wearing wears weary weather weave web wedding weed week weekend
weeks weep weigh weight weird welcome went were werent west wet whale
what whats wheat wheel when where whether which while whip whisker
whisper whistle white who whole whom whose why wicked wide widen widow
width wield wife wild wilderness will willing win wind window wine wing
winner winning wins winter wipe wire wisdom wise wish wished wishes
wishing with withdraw withstand witness witty wolf woman womans women
won wonder wonderful wont wood wooden wool word words wore work worked
worker working works workshop world worlds worm worn worried worries
worry worrying worship worth worthy would wouldnt wound wrap wreck
wrestle wring wrist write writes writing written wrong wrote yank yawn
year yearn years yell yet yield you youd youll young your youre yours
yourself youve zone zoom
)lex";

inline const std::unordered_set<std::string>& default_lexicon() {
    static const std::unordered_set<std::string> words = [] {
        std::unordered_set<std::string> out;
        std::istringstream in(kDefaultLexicon);
        std::string word;
        while (in >> word) out.insert(word);
        return out;
    }();
    return words;
}

}  // namespace termforge

#endif
