"""Build the bundled OCR wordlist.

Dedupes and sorts a hand-maintained pool of common English words, checks
they are lowercase alphabetic ASCII, and writes the first 2048 to
src/percept_cane/data/wordlist.txt. Run from the repository root.
"""

from pathlib import Path

TARGET = 2048

POOL = """
able about above absent accept access accident account accuse ache achieve acid
acorn across act action active actor actress actual adapt add address adjust
admire admit adopt adult advance advice afford afraid after again against age
agent agree ahead aim air airport alarm album alert alike alive all alley allow
almond almost alone along aloud alpha already also alter always amaze amber
amount amuse anchor ancient anger angle angry animal ankle annoy annual answer
ant antenna antler any anyone apart apology appeal appear apple apply approve
april apron arch area argue arise arm armor army around arrange arrest arrive
arrow art artist ash aside ask asleep aspect assist assume atlas atom attach
attack attempt attend attic attract auction august aunt author autumn avenue
avoid awake award aware away awful axis baby back bacon badge bag bake balance
balcony bald ball balloon bamboo banana band banjo bank banner bar barber bare
bargain bark barley barn barrel base basic basin basket bat batch bath battery
battle bay beach bead beak beam bean bear beard beast beat beauty beaver become
bed bee beech beef beet beetle before begin behave behind believe bell belly
belong below belt bench bend benefit berry beside best better between beyond
bicycle big bike bill bind birch bird birth bishop bit bite bitter black blade
blame blank blanket blast blaze bleak blend bless blind blink block blond blood
bloom blossom blouse blow blue blunt blush board boast boat body boil bold bolt
bone bonus book boost boot border bore borrow boss both bottle bottom bounce
bound bow bowl box boy brace brain brake branch brand brass brave bread break
breath breeze brick bridge brief bright brim bring brisk broad broken bronze
brook broom brother brown brush bubble bucket buckle bud budget buffalo bug
build bulb bulk bull bundle bunny burden burn burst bury bus bush business busy
butter button buy buzz cabbage cabin cable cactus cage cake calf call calm
camel camera camp can canal candle candy cane cannon canoe canvas canyon cap
cape captain car caravan carbon card care cargo carol carpet carrot carry cart
carve case cash cast castle cat catch cattle cause cave cedar ceiling celery
cell cellar cement census center cereal certain chain chair chalk chance change
chaos chapter charge charm chart chase cheap check cheek cheer cheese chef
cherry chess chest chew chicken chief child chill chime chin choice choir
choose chop chorus church cider cinema circle circus city claim clam clap
clarify clash clasp class claw clay clean clear clerk clever click cliff climb
cling clinic clip cloak clock close closet cloth cloud clover clown club clue
cluster clutch coach coal coast coat cobweb cocoa coconut code coffee coin cold
collar collect college color column comb combine come comet comfort comic
command comment common compare compass compete complex concert conduct cone
confirm connect consist contact contain content contest context control convey
cook cool copper copy coral cord core cork corn corner correct cost costume
cottage cotton couch cough could council count country county couple courage
course court cousin cover cow coyote crab crack cradle craft crane crash crate
crawl crayon crazy cream credit creek crew cricket crime crisp critic crop
cross crow crowd crown crumb crush crust cry crystal cube cuckoo cucumber cue
cult culture cup curb cure curious curl current curtain curve cushion custom
cut cycle dairy daisy damage damp dance danger dare dark dash date daughter
dawn day deal debate debris debt decade december decent decide deck declare
decline deer defense define degree delay deliver demand denim dense dentist
deny depart depend deposit depth deputy derive describe desert design desk
despair dessert detail detect develop device devote dew diagram dial diamond
diary dice dictate diesel diet differ dig digital dignity dilemma dim dinner
dinosaur direct dirt discuss dish dismiss display distance ditch dive divert
divide dizzy dock doctor document dog doll dolphin domain donate donkey donor
door dose dot double dough dove down dozen draft dragon drain drama draw dream
dress drift drill drink drip drive drop drum dry duck due dull dune during dusk
dust duty dwarf dwell eager eagle ear early earn earth ease east easy echo
ecology economy edge edit effort egg eight either elbow elder electric elegant
element elephant elevator elite elk elm else embark emblem embrace emerge
emotion employ empty enable enact end endless endorse enemy energy enforce
engage engine enhance enjoy enlist enough enrich enroll ensure enter entire
entry envelope episode equal equip era erase erode erosion errand error erupt
escape essay estate eternal ethics evening event every evidence evoke evolve
exact example exceed excess exchange excite exclude excuse execute exercise
exhaust exhibit exile exist exit exotic expand expect expire explain expose
express extend extra eye fabric face fact faculty fade faint fair faith fall
false fame family famous fan fancy fantasy farm fashion fat fatal father fatigue
fault favorite fawn feather feature february federal fee feed feel fellow felt
female fence fern ferry festival fetch fever few fiber fiction fiddle field
fierce fifteen fig fight figure file fill film filter final find fine finger
finish fir fire firm first fiscal fish fit fitness fix flag flair flake flame
flannel flash flat flavor flax fleet flesh flick flight flint flip float flock
flood floor flour flow flower fluid flush flute fly foam focus fog foil fold
folk follow fond food fool foot force forest forget fork form fort fortune
forum forward fossil foster found fountain fox fragile frame free freeze
freight fresh friend fringe frog from front frost frown frozen fruit fuel full
fun funnel funny fur furnace further future gadget gain galaxy gallery game gap
garage garden garlic garment gas gasp gate gather gauge gaze gear gem general
genius gentle genuine gesture get ghost giant gift giggle ginger giraffe girl
give glad glance glare glass glide glimpse globe gloom glory glove glow glue
goat gold good goose gorilla gospel gossip govern gown grab grace grade grain
grand grant grape graph grasp grass gravel gravity gray graze great green greet
grid grief grill grin grind grip grit grocery ground group grove grow guard
guess guest guide guilt guitar gulf gull gust gutter habit hair half hall hammer
hammock hamster hand handle hang happen happy harbor hard hare harm harvest
hassle hat hatch haul have hawk hay hazard hazel head health heap hear heart
heat heavy hedge heel height hello helmet help hem hen herb herd hero heron
hidden hide high hill hint hip hire history hive hobby hockey hold hole holiday
hollow holly home honest honey hood hoof hook hope horizon horn horse hospital
host hotel hour house hover hub huddle huge human humble humor hundred hunger
hunt hurdle hurry hurt husband hut hybrid hymn ice icicle icon idea identify
idle ignore ill image imitate immense immune impact import impose improve
impulse inch include income increase index indicate indoor industry infant
inform inhale inherit initial inject injury inmate inner innocent input inquiry
insane insect inside inspire install intact interest into invest invite involve
iron island isolate issue item ivory ivy jacket jaguar jar jaw jazz jealous
jeans jelly jewel job join joke journal journey joy judge juice july jumble
jump june jungle junior junk jury just justice keen keep kernel kettle key kick
kid kidney kind kingdom kiss kit kitchen kite kitten kiwi knee kneel knife
knight knit knob knock knot know koala label labor lace lack ladder lady lake
lamb lamp land lane language lantern lap large lark laser last latch late
laugh launch laundry lava law lawn lawsuit layer lazy lead leaf league lean
leap learn leash least leather leave lecture ledge left leg legal legend lemon
lend length lens leopard lesson letter lettuce level lever liberty library
license lid life lift light like lily limb lime limit line linen link lion lip
liquid list listen little live lizard load loaf loan lobby lobster local lock
lodge loft log logic lonely long look loop loose lord lose loss lot lotion
lotus loud lounge love loyal lucky luggage lumber lump lunar lunch lung lure
lush luxury lyrics machine mad magic magnet maid mail main major make mammal
man manage mandate mango mansion manual maple marble march margin marine market
marry marsh mask mass master mat match material math matrix matter mattress
mature maximum may maze meadow meal mean measure meat medal media medium meet
mellow melody melon melt member memory mention menu mercy merge merit merry
mesh message metal meter method middle midnight might mild mile milk mill mimic
mind mineral minimum minor mint minute miracle mirror misery miss mission mist
mistake mix mixture mobile model modest modify module moist mold moment monitor
monkey month moon moose moral more morning mosaic mosque mostly moth mother
motion motor mound mount mouse mouth move movie mow much mud muffin mule multiply
muscle museum mushroom music must mutual myth nail name napkin narrow nasty
nation nature navy near neat neck nectar need needle negative neglect neighbor
neither nephew nerve nest net network neutral never new news next nice niece
night noble nod noise noodle noon normal north nose note nothing notice
notify noun novel now nozzle nuance number nurse nut nylon oak oar oasis oat
obey object oblige oboe observe obtain obvious occur ocean october octopus odd
odor off offer office often oil okay old olive omit once one onion only onset
onto opal open opera opinion oppose option oral orange orbit orchard order
ordinary organ orient origin orphan ostrich other otter ought ounce outcome
outdoor outer output outside oval oven over overall orca owe owl own owner
oxygen oyster ozone pace pack paddle page pail pain paint pair palace pale palm
pan pancake panda panel panic panther paper parade parcel pardon parent park
parlor parrot parsley part party pass past pasta paste pastry pasture pat patch
path patient patio patrol pattern pause pave paw pay pea peace peach peak
peanut pear pearl pebble pecan pedal peel peer pelican pen penalty pencil
penguin penny people pepper percent perch perfect perform perfume perhaps peril
period permit person pest pet petal phase phone photo phrase physical piano
pick picnic picture piece pier pigeon pile pill pillow pilot pine pink pioneer
pipe pistol pitch pity pivot pixel pizza place plain plan planet plank plant
plaster plastic plate play plaza pleasant please pledge plenty plot plow pluck
plug plum plunge pocket pod poem poet point polar pole police policy polish
polite pollen pond pony pool poor poplar popular porch port portion portrait
pose position possible post poster pot potato pouch pound pour powder power
practice prairie praise predict prefer premium prepare present preserve press
pretty prevent price pride priest primary prince print prior prison private
prize problem process produce profit program project promise promote prompt
proof proper protect proud prove provide prune public pudding puddle pull
pulp pulse pump pumpkin punch pupil puppy pure purple purpose purse push put
puzzle pyramid quail quality quantum quarrel quarter queen query quest question
queue quick quiet quill quilt quit quite quiver quiz quota quote rabbit raccoon
race rack radar radio radish raft rag rail rain raise raisin rake rally ramp
ranch random range rank rapid rare rash rate rather raven raw razor reach react
read ready real reason rebel rebuild recall receive recipe record recover
recruit recycle red reduce reed reef refer reflect reform refuse region regret
regular reject relax release relief rely remain remember remind remove render
renew rent reopen repair repeat replace reply report request rescue research
resemble reside resist resource respect respond rest result retire retreat
return reunion reveal review reward rhythm ribbon rice rich ride ridge rifle
right rigid rim ring rinse riot ripe ripple rise risk rival river road roam
roast robe robin robot robust rock rocket rod role roll roof rookie room
rooster root rope rose rotate rough round route routine row royal rubber
rubble ruby rudder rude rug rugby ruin rule rumble run rural rush rust rustic
sack saddle safe sail salad salmon salon salt salute same sample sand sandal
satisfy sauce sausage save saw say scale scan scarf scatter scene scheme school
science scissors scoop scope score scout scrap screen script scrub sea seal
seam search season seat second secret section sector secure see seed seek seem
segment seize seldom select self sell seminar senior sense sentence separate
series serious serve session settle setup seven several shadow shaft shake
shall shallow shame shape share shark sharp shave shed sheep sheet shelf shell
shelter shield shift shine ship shirt shiver shock shoe shoot shop shore short
should shout shovel show shrimp shrub shuffle shut shy sibling sick side siege
sight sign silent silk silly silver simple since sing siren sister sit site
six size skate sketch ski skill skin skirt skull sky slab slam sleep sleeve
slender slice slide slight slim slogan slope slot slow slush small smart smile
smoke smooth snack snail snake sneak snow soap soccer social sock soda sofa
soft soil solar soldier sole solid solve some son song soon sorry sort soul
sound soup source south space spare spark sparrow spatial spawn speak special
speed spell spend sphere spice spider spike spill spin spine spiral spirit
split spoil sponsor spoon sport spot spray spread spring sprout spruce spy
square squash squirrel stable stadium staff stage stair stamp stand staple
star start state station stay steady steak steel steep stem step stereo stick
still sting stock stomach stone stool stop store storm story stove straw
stream street stress strike string stripe strong studio study stuff stumble
style subject submit subtle suburb subway success such sudden suffer sugar
suggest suit summer sun sunny sunset super supply support sure surface surge
surprise surround survey suspect sustain swallow swamp swan swap swarm swear
sweet swift swim swing switch sword symbol symptom syrup system table tackle
tag tail talent talk tall tank tape target task taste tattoo taxi tea teach
team tear tell ten tenant tennis tent term test text thank that theme then
theory there they thing think third this thorn thought three thrive throw
thumb thunder ticket tide tidy tiger tilt timber time tiny tip tired tissue
title toast tobacco today toddler toe together toilet token tomato tomorrow
tone tongue tonight tool tooth top topic topple torch tornado tortoise toss
total touch tough tour toward towel tower town toy track trade traffic tragic
trail train transfer trap travel tray treat tree trek trend trial tribe trick
trigger trim trip triumph troop trophy trouble truck true truly trumpet trust
truth try tube tuition tulip tumble tuna tunnel turkey turn turtle tutor
twelve twenty twice twig twin twist two type typical ugly umbrella unable
uncle uncover under undo unfair unfold unhappy uniform unique unit universe
unknown unlock until unusual unveil update upgrade uphold upon upper upset
urban urge usage use used useful useless usual utility vacant vacuum vague
vain valid valley value valve van vanish vapor various vast vault veal vein
velvet vendor venture venue verb verify verse very vessel veteran viable
vibrant vicious victory video view vigor village vine vintage violet violin
virtual virtue visa visible vision visit visual vital vivid vocal voice void
volcano volume vote voyage wage wagon waist wait wake walk wall walnut want
warm warn warrior wash wasp waste watch water wave way wealth weapon wear
weasel weather web wedding wedge week weird welcome well west wet whale what
wheat wheel when where which while whip whisper white who whole why wide width
wife wild will willow win wind window wine wing wink winner winter wire wisdom
wise wish witness wolf woman wonder wood wool word work world worry worth
would wrap wreck wrestle wrist write wrong yard yarn year yeast yellow yes
yesterday yield yogurt young youth zebra zero zigzag zinc zone zoo
""".split()


def main() -> None:
    words = sorted(set(POOL))
    bad = [w for w in words if not (w.isascii() and w.isalpha() and w == w.lower())]
    if bad:
        raise SystemExit(f"non-conforming words: {bad[:20]}")
    if len(words) < TARGET:
        raise SystemExit(f"pool too small: {len(words)} unique words, need {TARGET}")
    words = words[:TARGET]
    out = Path("src/percept_cane/data/wordlist.txt")
    out.write_text("\n".join(words) + "\n")
    print(f"wrote {len(words)} words to {out}")


if __name__ == "__main__":
    main()
