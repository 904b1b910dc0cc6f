#!/usr/bin/env python3
"""Generate the bundled dictionary (crates/core/assets/words.txt).

Expands a curated base lexicon with regular English inflections and merges
in an explicit list of function words and irregular forms.  Output is a
sorted, deduplicated, lowercase, newline-delimited list.  The checked-in
file is the source of truth; this script documents how it was produced.

Inflection flags:
  n   noun plural +s            e   plural +es
  y   final-y noun -> -ies
  v   verb +s +ed +ing          w   e-final verb +s +d -e+ing
  d   CVC verb +s, double final consonant for +ed +ing
  vy  y-final verb -> -ies -ied +ing
  vh  sibilant-final verb +es +ed +ing
  r   adjective +er +est        re  e-final adjective +r +st
  l   adverb +ly
"""

import os
import sys

LEMMAS = """
absence n
accent n
accept v
access e
accident n
account v n
accuse w
ace w n
achieve w
acid n
act v n
action n
active l
actor n
actress e
adapt v
add v
address e vh
adjust v
admire w
admit d
adopt v
adult n
advance w
advantage n
adventure n
advice
advise w
affair n
affect v
afford v
afternoon n
age w n
agency y
agent n
agree v
aid v n
aim v n
air n
airline n
airport n
alarm v n
album n
alert v n
allow v
ally y
almond n
alphabet n
alter v
amaze w
amount v n
anchor v n
angel n
anger n
angle n
animal n
ankle n
announce w
annoy v
answer v n
ant n
antenna n
anthem n
apart
apartment n
apology y
appeal v n
appear v
apple n
apply vy
appoint v
approach e vh
approve w
april n
apron n
arch e vh
area n
arena n
argue w
argument n
arm v n
armor n
army y
arrange w
arrest v
arrive w
arrow n
art n
article n
artist n
ash e
ask v
aspect n
assert v
assign v
assist v
assume w
atom n
attach e vh
attack v n
attempt v n
attend v
attic n
attitude n
attract v
auction n
audience n
august n
aunt n
author n
autumn n
avenue n
average n
avoid v
award v n
awe n
axis
axle n
babble w
baby y
back v n
backbone n
background n
backpack n
bacon n
badge n
bag n
bake w
baker n
bakery y
balance w
balcony y
bald r
ball n
balloon n
banana n
band n
bandage n
banjo n
bank v n
banker n
banner n
bar n
barber n
bare w re
bargain v n
bark v n
barn n
barrel n
base w
basement n
basic n
basin n
basket n
bat n
batch e
bath n
bathe w
battery y
battle w
bay n
beach e vh
bead n
beak n
beam v n
bean n
bear n
beard n
beast n
beat n
beauty y
beaver n
bed n
bedroom n
bee n
beech e
beef n
beep v
beet n
beetle n
begin n
behavior n
being n
belief n
believe w
bell n
belly y
belong v
below
belt n
bench e
bend n
benefit v n
berry y
bet n
better v
bicycle n
big
bike w
bill v n
bin n
bind n
biology
birch e
bird n
birth n
biscuit n
bit n
bite w
bitter l
black r n
blade n
blame w
blank r n
blanket n
blast v n
blaze w
bleach e vh
blend v n
bless v
blind v
blink v
block v n
blond r
blood
bloom v
blossom v n
blot d
blouse n
blow n
blue re
board v n
boast v
boat n
body y
boil v
bold r l
bolt v n
bond v n
bone w
bonus e
book v n
bookcase n
boom v
boot v n
booth n
border v n
bore w
borrow v
boss e vh
bottle w
bottom n
boulder n
bounce w
bound v
bow v n
bowl v n
box e vh
boy n
brace w
bracket v n
brag d
brain n
brake w
branch e vh
brand v n
brass e
brave re l
bread n
break n
breakfast n
breath n
breathe w
breeze n
brew v
brick n
bridge w
brief r l
bright r l
brilliant l
bring n
broad r l
broadcast n
bronze n
brook n
broom n
brother n
brow n
brown r n
brush e vh
bubble w
bucket n
buckle w
bud n
budget v n
bug n
build v
builder n
bulb n
bulk n
bull n
bullet n
bump v n
bundle w
bunk n
burden v n
burn v
burrow v n
burst n
bus e
bush e
business e
butter n
button v n
buyer n
cabbage n
cabin n
cabinet n
cable w
cactus e
cage w
cake w
calendar n
calf
call v n
calm r v l
camel n
camera n
camp v n
campaign v n
campus e
canal n
candidate n
candle n
candy y
cannon n
canoe n
canvas e
canyon n
cap n
capital n
captain n
capture w
car n
carbon n
card n
cardboard
care w
career n
careful
cargo e
carpenter n
carpet n
carrot n
carry vy
cart v n
carton n
cartoon n
carve w
case w
cash
casual l
cat n
catalog v n
cattle
cause w
caution v n
cave w
ceiling n
celebrate w
cell n
cellar n
cement v n
cent n
center v n
central l
century y
cereal n
ceremony y
certain l
chain v n
chair n
chalk n
challenge w
chamber n
champion n
chance w
change w
channel n
chant v
chapter n
charge w
charm v n
chart v n
chase w
cheap r l
check v n
cheek n
cheer v
cheese n
chemical n
chemistry
cherry y
chess
chest n
chew v
chicken n
chief n
child
chill v
chimney n
chin n
chip d
chocolate n
choice n
choir n
chop d
chorus e
chunk n
church e
circle w
circuit n
circus e
citizen n
city y
civil
claim v n
clam n
clamp v n
clap d
class e
classic n
classroom n
clause n
claw v n
clay
clean v r
cleaner n
clear v r l
clerk n
clever r l
click v n
client n
cliff n
climate n
climb v
clinic n
clip d
cloak n
clock n
close w
closet n
cloth n
cloud n
clover n
clown n
club n
clue n
cluster v n
clutch e vh
coach e vh
coal n
coast v n
coat v n
code w
coil v n
coin v n
cold r n
collar n
collect v
college n
colony y
color v n
column n
comb v n
combine w
comet n
comfort v n
comic n
comma n
command v n
comment v n
commerce
committee n
common r l
company y
compare w
compass e
compete w
complain v
complete w
complex
compose w
compute w
computer n
concept n
concern v
concert n
conclude w
concrete
condition n
conduct v
cone n
confess v
confirm v
conflict v n
confuse w
congress e
connect v
consent v
consider v
consist v
console w
consonant n
constant l
construct v
consult v
consume w
contact v n
contain v
content v
contest v n
context n
continue w
contract v
contrast v
control n
convince w
cook v n
cookie n
cool v r l
copper
copy vy
coral n
cord n
core w
cork n
corn n
corner v n
correct v l
cost n
costume n
cottage n
cotton
couch e
cough v
council n
count v n
counter n
country y
county y
couple w
courage
course n
court n
cousin n
cover v n
cow n
coward n
crab n
crack v n
cradle n
craft v n
crane n
crash e vh
crate w
crawl v
crayon n
cream n
crease w
create w
creature n
credit v n
creek n
crew n
cricket n
crime n
crisp r
critic n
crop d
cross e vh r
crow v n
crowd v n
crown v n
cruel l
cruise w
crumb n
crumble w
crush e vh
crust n
crystal n
cub n
cube n
cucumber n
culture n
cup n
cupboard n
curb v n
cure w
curious l
curl v n
current n l
curtain n
curve w
cushion n
custom n
customer n
cycle w
daily
dairy y
damage w
damp r
dance w
dancer n
danger n
dare w
dark r n
dart v n
dash e vh
data
date w
daughter n
dawn v n
day n
deal n
dealer n
dear r
debate w
debt n
decade n
december n
decide w
deck n
declare w
decline w
decorate w
deed n
deep r l
deer
defeat v n
defend v
define w
degree n
delay v n
deliver v
demand v n
den n
dense re l
dentist n
deny vy
depart v
depend v
deposit v n
depth n
describe w
desert v n
deserve w
design v n
desire w
desk n
dessert n
destroy v
detail v n
detect v
develop v
device n
devote w
diagram n
dial v n
diamond n
diary y
dictionary y
differ v
dig n
digest v
digit n
dim d
dime n
dinner n
direct v l
dirt
discover v
discuss e vh
disease n
dish e vh
disk n
distance n
district n
disturb v
ditch e
dive w
divide w
dock v n
doctor n
document v n
dog n
doll n
dollar n
dolphin n
domain n
donate w
donkey n
door n
dot d
double w
doubt v n
dough
dove n
dozen n
draft v n
dragon n
drain v n
drama n
draw n
drawer n
dream v n
dress e vh
drift v n
drill v n
drink n
drip d
driver n
drop d
drum d
dry vy
duck v n
dull r
dump v n
dust v n
duty y
eager l
eagle n
ear n
early
earn v
earth
east
easy
echo vh
edge w
edit v
editor n
educate w
effect n
effort n
egg n
elbow n
elder n
elect v
electric
elegant l
element n
elephant n
elevator n
emerge w
empire n
employ v
empty vy
end v n
enemy y
energy y
engage w
engine n
engineer n
enjoy v
enrich e vh
enter v
entire l
entrance n
entry y
envelope n
equal v l
equation n
equip d
era n
erase w
error n
escape w
essay n
estate n
estimate w
evening n
event n
evil
exact l
exam n
examine w
example n
exceed v
excellent l
except v
exchange w
excite w
excuse w
exercise w
exist v
exit v n
expand v
expect v
expense n
experiment v n
expert n
explain v
explore w
export v
expose w
express e vh
extend v
extra
eye n
fabric n
face w
fact n
factor n
factory y
fade w
fail v
faint r v
fair r l
faith n
fall n
false
fame
family y
famous l
fan n
fancy y
far
fare w
farm v n
farmer n
fashion n
fast r
fasten v
fat n
father n
fault n
favor v n
favorite n
fear v n
feast v n
feather n
feature w
february
fee n
feed n
feel n
fellow n
fence w
fern n
ferry y
festival n
fetch e vh
fever n
fiber n
fiction
field n
fierce re l
fig n
fight n
figure w
file w
fill v
film v n
filter v n
fin n
final n l
finance w
finch e
find v
fine w re l
finger n
finish e vh
fire w
firm r n l
fish e vh
fisherman
fist n
fit d
fix e vh
flag n
flake w
flame w
flap d
flash e vh
flask n
flat r n
flavor v n
flee
fleet n
flesh
flick v
flight n
flip d
float v
flock v n
flood v n
floor n
flour
flow v n
flower n
fluid n
flute n
foam v
focus e vh
fog n
foil n
fold v n
folk n
follow v
fond r
food n
fool v n
foot
football n
force w
forecast n
forehead n
forest n
forget
forgive
fork v n
form v n
formal l
format d
fortune n
forward v
fossil n
foster v
found v
fountain n
fox e
fraction n
fragment n
frame w
free w r l
freedom
freeze w
frequent l
fresh r l
friday n
fridge n
friend n
fringe n
frog n
front n
frost n
frown v
fruit n
fuel n
full r
fun
function v n
fund v n
funnel n
funny
fur n
furnace n
furniture
future n
gain v n
galaxy y
gallery y
gallon n
game n
gap n
garage n
garden n
garlic
gas e
gate n
gather v
gauge w
gaze w
gear n
gem n
general l
generate w
generous l
gentle re
genuine l
gesture w
ghost n
giant n
gift n
giggle w
ginger
giraffe n
girl n
give w
glacier n
glad
glance w
glass e
glide w
globe n
gloom
glory y
glove n
glow v
glue w
goal n
goat n
gold
golden
golf
good n
goose
grab d
grace w
grade w
grain n
grand r
grant v n
grape n
graph v n
grasp v
grass e
gravel
gravity
gray n
graze w
grease w
great r l
green r n
greet v
grid n
grief
grill v n
grin d
grind v
grip d
groan v
grocery y
groove w
ground v n
group v n
grove n
guard v n
guess e vh
guest n
guide w
guitar n
gulf n
gum n
gust n
gutter n
habit n
hair n
half
hall n
hallway n
halt v
hammer v n
hand v n
handle w
hang v
happen v
happy
harbor v n
hard r
hardware
harm v n
harvest v n
haste
hat n
hatch e vh
haul v
hawk n
hay
hazard n
head v n
headline n
heal v
health
heap v n
hear v
heart n
heat v n
heavy
hedge n
heel n
height n
helmet n
help v
helper n
hen n
herd v n
hero
hesitate w
hide w
high r l
highway n
hike w
hill n
hint v n
hip n
hire w
history y
hit d
hive n
hobby y
hockey
hold v
holder n
hole n
holiday n
hollow n
home n
honest l
honey
honor v n
hood n
hook v n
hope w
horizon n
horn n
horse n
hose n
hospital n
host v n
hotel n
hour n
house w
however
hug d
huge re
hum d
human n
humble re
humor
hunger
hungry
hunt v
hunter n
hurry vy
hut n
ice w
icon n
idea n
ideal n l
identify vy
idle w
ignore w
ill
image n
imagine w
impact v n
import v
impose w
improve w
inch e vh
include w
income n
increase w
indeed
index e vh
indicate w
industry y
infant n
inform v
initial l
injure w
ink n
inn n
input n
insect n
insert v
inside
insist v
inspect v
inspire w
install v
instance n
instant l
instead
instrument n
insult v
insurance
intend v
intense l
interest v n
interior n
internal l
interval n
interview v n
introduce w
invest v
invite w
involve w
iron v n
island n
issue w
item n
jacket n
jam d
january
jar n
jaw n
jazz
jeans
jelly y
jet n
jewel n
job n
jog d
join v
joint n
joke w
journal n
journey n
joy n
judge w
juice n
july
jump v
junction n
june n
jungle n
junior n
jury y
justice
justify vy
keen r l
keep v
kernel n
kettle n
key n
keyboard n
kick v n
kid n
kind r n
king n
kingdom n
kiss e vh
kit n
kitchen n
kite n
kitten n
knee n
kneel v
knife
knight n
knit d
knock v n
knot d
label v n
labor v
lace w
lack v n
ladder n
lake n
lamb n
lamp n
land v n
landscape n
lane n
language n
lantern n
lap n
large re l
laser n
last v l
latch e
late r
latter
laugh v
launch e vh
laundry y
law n
lawn n
lawyer n
layer n
lazy
lead n
leader n
leaf
league n
leak v n
lean v
leap v
learn v
lease w
leather n
leave w
lecture w
ledge n
legal l
legend n
lemon n
lend v
length n
lens e
lesson n
letter n
lettuce
level v n
lever n
library y
license w
lid n
lift v
light r v n l
lightning
limb n
lime n
limit v n
line w
linen n
link v n
lion n
lip n
liquid n
list v n
listen v
liter n
little
live w
lively
liver n
lizard n
load v n
loaf
loan v n
lobby y
lobster n
local l
locate w
lock v n
locker n
lodge w
loft n
log d
logic
lone
long r
look v n
loop v n
loose re l
lord n
lose
loss e
lot n
loud r l
lounge w
love w
lovely
low r n
loyal l
luck
lucky
luggage
lumber
lump n
lunch e vh
lung n
machine n
magazine n
magic
magnet n
maid n
mail v n
main l
major n
make w
male n
mall n
mammal n
manage w
manager n
mango e
manner n
mansion n
manual n l
map d
maple n
marble n
march e vh
margin n
marine n
mark v n
market v n
marry vy
marsh e
mask v n
mass e
master v n
mat n
match e vh
mate w
material n
math
matter v n
mature w re
maximum
mayor n
meadow n
meal n
mean r
meaning n
meanwhile
measure w
meat n
mechanic n
medal n
media
medical l
medicine n
medium
meet v
melody y
melon n
melt v
member n
memory y
mental l
mention v
menu n
mercy
mere l
merge w
merit v n
merry
mess e
message n
messenger n
metal n
meter n
method n
middle n
midnight
might
mild r l
mile n
military y
milk v
mill n
million n
mind v n
mine w
mineral n
minimum
minister n
minor n
mint n
minute n
miracle n
mirror v n
miss e vh
mission n
mist n
mistake n
mix e vh
mixture n
moan v
mobile
model v n
modern
modest l
modify vy
moist
moment n
monday n
money
monitor v n
monkey n
monster n
month n
mood n
moon n
mop d
moral l
morning n
mosquito e
moss e
most l
motel n
mother n
motion n
motor n
mount v
mountain n
mouse
mouth n
move w
movie n
mud
muffin n
mule n
multiply vy
muscle n
museum n
music
musician n
mustard
mutter v
mystery y
nail v n
name w
nap d
napkin n
narrow r v
nation n
native n
nature n
navy y
near v r l
neat r l
neck n
needle n
neglect v
neighbor n
nephew n
nerve n
nest v n
net n
network n
neutral
never
new r l
news
newspaper n
nice re l
nickel n
niece n
night n
noble re
nod d
noise n
noon
normal l
north
nose n
note w
notebook n
nothing
notice w
notion n
noun n
novel n
november
number v n
nurse w
nut n
oak n
oar n
oat n
obey v
object v n
oblige w
observe w
obtain v
obvious l
occasion n
occupy vy
occur d
ocean n
october
odd r l
odor n
offend v
offer v n
office n
officer n
official n l
often
oil v n
olive n
onion n
open v l
opera n
operate w
opinion n
oppose w
option n
orange n
orbit v n
orchard n
order v n
ordinary
organ n
organize w
origin n
original n l
ornament n
orphan n
ostrich e
other n
otter n
ounce n
outcome n
outdoor
outer
outfit n
outline w
output n
outside
oval n
oven n
overall
overlap d
owe w
owl n
own v
owner n
oxygen
oyster n
pace w
pack v n
package n
pad d
paddle w
page n
pail n
pain n
paint v n
painter n
pair v n
palace n
pale re
palm n
pan n
pancake n
panel n
panic n
paper n
parade w
paragraph n
parcel n
pardon v n
parent n
park v n
parrot n
part v n
partial l
particle n
partner n
party y
pass e vh
passage n
passenger n
past
pasta
paste w
pastry y
pasture n
pat d
patch e vh
path n
patient n l
pattern n
pause w
pave w
paw n
payment n
pea n
peace
peach e
peak n
peanut n
pear n
pearl n
pebble n
pedal n
peel v n
peer v
pen n
pencil n
penny y
pension n
pepper n
perceive w
percent n
perfect l
perform v
perfume n
perhaps
period n
permanent l
permit d
person n
pet d
petal n
phase n
phone w
photo n
phrase w
physical l
piano n
pick v
picnic n
picture w
pie n
piece n
pig n
pigeon n
pile w
pillow n
pilot v n
pin d
pinch e vh
pine n
pink r
pint n
pioneer n
pipe n
pit n
pitch e vh
pity y
pizza n
place w
plain r n l
plan d
plane n
planet n
plank n
plant v n
plastic n
plate n
platform n
pleasant l
please w
pleasure n
plenty
plot d
plow v n
plug d
plum n
plumber n
plunge w
pocket n
poem n
poet n
poetry
point v n
poison v n
polar
pole n
police
policy y
polish e vh
polite l
pond n
pony y
pool n
poor r l
pop d
popular
porch e
port n
porter n
portion n
portrait n
position n
positive l
possess e vh
possible
post v n
poster n
pot n
potato e
pottery
pouch e
pound v n
pour v
powder n
power n
practical l
practice w
praise w
pray v
prayer n
precious l
precise l
predict v
prefer d
prepare w
present v l
preserve w
president n
press e vh
pressure n
pretend v
pretty
prevent v
preview n
previous l
price w
pride n
priest n
primary
prime
prince n
princess e
print v n
printer n
prison n
private l
prize n
problem n
proceed v
process e vh
produce w
product n
profession n
professor n
profit v n
program d
progress e
project v n
promise w
prompt v l
pronounce w
proof n
proper l
property y
propose w
protect v
protest v
proud r l
prove w
provide w
public
publish e vh
pudding n
puddle n
pull v
pulse n
pump v n
pumpkin n
punch e vh
punish e vh
pupil n
puppet n
puppy y
purchase w
pure re l
purple
purpose n
purse n
pursue w
push e vh
puzzle w
python n
quality y
quantity y
quarrel v n
quart n
quarter n
queen n
question v n
quick r l
quiet r l
quilt n
quit
quite
quiz
quote w
rabbit n
raccoon n
race w
rack n
radar n
radio n
raft n
rag n
rail n
railroad n
rain v n
rainbow n
raise w
rake w
ranch e
random l
range w
rank v n
rapid l
rare re l
rate w
rather
ratio n
raven n
raw
ray n
razor n
reach e vh
react v
read v
reader n
ready
real
reason v n
rebel d
recall v
receive w
recent l
recipe n
recite w
reckon v
recognize w
recommend v
record v n
recover v
red n
reduce w
reed n
reef n
refer d
reflect v
reform v n
refuse w
regard v
region n
register v n
regret d
regular l
reject v
relate w
relax e vh
release w
relief
relieve w
rely vy
remain v
remark v n
remedy y
remember v
remind v
remote l
remove w
renew v
rent v n
repair v n
repeat v
replace w
reply vy
report v n
reporter n
represent v
request v n
require w
rescue w
research e vh
resemble w
reserve w
resign v
resist v
resort n
resource n
respect v n
respond v
rest v n
result v n
resume w
retain v
retire w
retreat v n
return v n
reveal v
revenge
reverse w
review v n
revise w
revive w
reward v n
rhyme w
rhythm n
ribbon n
rice
rich r
riddle n
ride w
ridge n
rifle n
right n l
rigid l
rim n
ring n
rinse w
ripe re
rise w
risk v n
rival n
river n
road n
roam v
roar v
roast v
rob d
robe n
robin n
robot n
rock v n
rocket n
rod n
role n
roll v n
roof n
room n
root v n
rope n
rose n
rotate w
rough r l
round r v n
route w
routine n
row v n
royal l
rub d
rubber
rude re l
rug n
ruin v n
rule w
ruler n
rumor n
rush e vh
rust v
sack n
sad
saddle n
safe re l
safety
sail v n
sailor n
salad n
salary y
sale n
salmon
salt v
salute w
sample w
sand n
sandal n
sandwich e
satisfy vy
saturday n
sauce n
saucer n
sausage n
save w
saw n
scale w
scan d
scar d
scarce l
scare w
scarf
scatter v
scene n
scent n
schedule w
scheme n
scholar n
school n
science n
scientist n
scissors
scoop v n
scope n
score w
scorn v
scout v n
scrap d
scrape w
scratch e vh
scream v n
screen v n
screw v n
script n
scrub d
sea n
seal v n
seam n
search e vh
season n
seat v n
second n l
secret n l
section n
secure w
seed n
seek v
seem v
seize w
seldom
select v
selfish
sell v
seller n
senate n
senator n
send v
senior n
sense w
sentence n
separate w
september
sequence n
series
serious l
servant n
serve w
service n
session n
set n
settle w
several
severe re l
sew v
shade w
shadow n
shaft n
shake w
shall
shallow r
shame w
shape w
share w
sharp r l
shave w
shawl n
shed n
sheep
sheet n
shelf
shell v n
shelter v n
shepherd n
shield v n
shift v n
shine w
ship d
shirt n
shiver v
shock v n
shoe n
shoot v
shop d
shore n
short r l
shoulder n
shout v
shovel n
show v n
shower v n
shrimp n
shrink v
shrub n
shrug d
shut
shuttle n
shy
sick
side n
sidewalk n
sigh v
sight n
sign v n
signal v n
silence w
silent l
silk n
silly
silver
similar l
simple re
since
sincere l
single w
sink v
sip d
sir n
sister n
sit
site n
size w
skate w
sketch e vh
ski v
skill n
skin n
skip d
skirt n
skull n
sky y
slab n
slam d
slant v
slap d
slate n
sled n
sleep v
sleeve n
slender
slice w
slide w
slight r l
slim d
slip d
slope w
slot n
slow v r l
slump v
small r
smart r l
smash e vh
smell v n
smile w
smoke w
smooth v r l
snack n
snail n
snake n
snap d
sneeze w
snow v n
soak v
soap n
soar v
sob d
soccer
social l
society y
sock n
soda n
sofa n
soft r l
soil v n
solar
soldier n
sole l
solid n l
solution n
solve w
son n
song n
soon r
sore re
sorrow n
sort v n
soul n
sound v n
soup n
sour v
source n
south
space w
spade n
span d
spare w
spark v n
sparrow n
speak v
speaker n
spear n
special n l
species
specific
specimen n
speech e
speed n
spell v
spend v
sphere n
spice n
spider n
spike n
spill v
spin n
spirit n
splash e vh
split
spoil v
sponge n
spoon n
sport n
spot d
spray v n
spread v
spring n
sprinkle w
sprout v
spur d
square w
squash e vh
squeeze w
squirrel n
stable n
stack v n
stadium n
staff n
stage w
stain v n
stair n
stake n
stale
stalk n
stall v n
stamp v n
stand n
standard n
staple w
star d
stare w
start v
state w
statement n
station n
statue n
status e
stay v
steady
steak n
steal v
steam v
steel
steep r
steer v
stem d
step d
stereo n
stick n
stiff r
still
sting n
stir d
stitch e vh
stock v n
stomach e
stone n
stool n
stoop v
stop d
store w
storm v n
story y
stove n
straight
strain v n
strand n
strange re l
stranger n
strap d
straw n
stream v n
street n
strength n
stress e vh
stretch e vh
strict r l
stride w
strike w
string n
strip d
stripe n
stroke w
stroll v
strong r l
structure n
struggle w
stubborn
student n
studio n
study vy
stuff v
stumble w
stump n
sturdy
style n
subject n
submit d
substance n
subtle
subtract v
suburb n
succeed v
success e
such
sudden l
suffer v
sugar
suggest v
suit v n
sullen
sum d
summary y
summer n
summit n
sunday n
sunny
sunset n
supper n
supply vy
support v n
suppose w
supreme
sure re l
surface w
surgeon n
surplus e
surprise w
surround v
survey v n
survive w
suspect v
swallow v
swamp n
swan n
swarm v
sweater n
sweep v
sweet r l
swell v
swift r l
swim d
swing n
switch e vh
sword n
syllable n
symbol n
system n
table n
tablet n
tackle w
tag d
tail n
tailor n
talent n
talk v
tall r
tame w re
tan d
tangle w
tank n
tap d
tape w
target v n
task n
taste w
tax e vh
taxi n
teach e vh
teacher n
team n
tear n
tease w
technical l
telephone n
telescope n
television n
tell v
temper n
temperature n
temple n
tempt v
tend v
tender l
tennis
tense re
tent n
term n
terminal n
terrace n
territory y
test v n
text n
texture n
thank v
theater n
theme n
theory y
thick r l
thief
thin d
thing n
think v
third n
thirst
thorn n
thorough l
thread v n
threat n
threaten v
thrill v
throat n
throne n
through
throw n
thumb n
thunder v
thursday n
ticket n
tide n
tidy vy
tie n
tiger n
tight r l
tile n
till v
timber n
time w
tin n
tiny
tip d
tire w
tissue n
title n
toad n
toast v
today
toe n
tomato e
tomorrow
ton n
tone n
tongue n
tonight
tool n
tooth
top n
topic n
torch e
toss e vh
total v l
touch e vh
tough r
tour v n
tourist n
toward
towel n
tower n
town n
toy n
trace w
track v n
tractor n
trade w
tradition n
traffic
trail v n
train v n
trait n
transfer d
translate w
transport v
trap d
travel v
tray n
treasure w
treat v
treatment n
tree n
tremble w
trench e
trend n
trial n
triangle n
tribe n
trick v n
trim d
trip d
triumph v
troop n
trophy y
trot d
trouble w
truck n
trumpet n
trunk n
trust v
truth n
try vy
tube n
tuesday n
tug d
tumble w
tune w
tunnel n
turkey n
turn v n
turtle n
tutor v n
twig n
twin n
twist v n
type w
typical l
ugly
umbrella n
uncle n
under
understand v
uniform n
union n
unique l
unit n
unite w
universe n
university y
unknown
upon
upper
upset
urban
urge w
urgent l
usage n
use w
useful
usual l
utter l
vacation n
vacuum n
vague re l
vain
valley n
value w
valve n
van n
vanish e vh
vapor n
variety y
various l
vary vy
vast r l
vault n
vegetable n
vehicle n
vein n
velvet
vendor n
venture w
verb n
verdict n
verse n
version n
vessel n
vest n
veteran n
victim n
victory y
view v n
village n
vine n
vinegar
violet n
violin n
virtue n
visible
vision n
visit v
visitor n
vital l
vivid l
vocal
voice w
volcano e
volume n
volunteer v n
vote w
vowel n
voyage n
wage n
wagon n
waist n
wait v
waiter n
wake w
walk v
wall n
wallet n
walnut n
wander v
want v
war n
warm v r l
warn v
wash e vh
waste w
watch e vh
water v n
wave w
wax e vh
weak r l
wealth
weapon n
wear n
weary
weather n
weave w
web n
wedding n
wednesday n
weed v n
week n
weekend n
weigh v
weight n
weird r l
welcome w
well n
west
wet d
whale n
wheat
wheel n
while
whisper v n
whistle w
white r
whole
wide r l
widow n
width n
wild r l
willow n
wilt v
win n
wind n
window n
wing n
winner n
winter n
wipe w
wire w
wisdom
wise re l
wish e vh
wit n
witch e
witness e vh
wolf
wonder v
wonderful
wood n
wooden
wool
word n
work v
worker n
workshop n
world n
worm n
worry vy
worth
wound v n
wrap d
wreck v n
wrench e
wrist n
write w
writer n
wrong l
yard n
yarn n
yawn v
year n
yell v
yellow n
yesterday
yield v
young r
youth
zebra n
zero e
zigzag n
zone n
zoo n
abandon v
ability y
able
aboard
absent
absorb v
abstract n
absurd l
abundant l
academy y
accompany vy
accomplish e vh
accurate l
ache w
acquire w
acre n
adequate l
adhere w
adjacent
admission n
advertise w
advisor n
aerial n
affection n
agenda n
aggressive l
agriculture
aisle n
algebra
alien n
align v
alike
alive
alley n
allowance n
aloud
altitude n
aluminum
amateur n
ambition n
amber
ambulance n
amend v
ample
amuse w
analyze w
ancestor n
ancient
angry
announce w
annual l
antique n
anxious l
anybody
apparatus e
apparent l
appetite n
applaud v
appliance n
applicant n
appreciate w
apprentice n
approximate l
arcade n
architect n
archive w
arctic
arise w
arithmetic
armchair n
aroma n
arrival n
arrogant l
arrow n
ascend v
asleep
asphalt
assemble w
assembly y
assess e vh
asset n
assistant n
associate w
assure w
asteroid n
astronaut n
athlete n
atlas e
atmosphere n
attain v
attraction n
audio
audit v
auditorium n
authentic
autograph n
automatic
automobile n
available
avalanche n
aviation
awake
award v n
aware
awful l
awkward l
bachelor n
backward
bacteria
baggage
balanced
ballad n
ballet n
bamboo
banquet n
barge n
barley
barometer n
barrier n
basalt
baseball n
basis
basketball n
bazaar n
beacon n
bearing n
bedtime
beforehand
behalf
behave w
behavior n
beige
belief n
beloved
beneath
beneficial
benefit v n
beside
besides
beverage n
beware
bewilder v
bias e
bible n
bibliography y
bid n
billion n
binary
binder n
biography y
biscuit n
bishop n
bizarre
blizzard n
blueprint n
blunt r l
blur d
bodyguard n
boil v
bolt v n
bonfire n
bookshelf
boost v
boundary y
bouquet n
boutique n
braid v n
braille
bravery
breadth
breakdown n
breakthrough n
breeze n
brevity
bribe w
brilliance
brink
briskly
broccoli
brochure n
broker n
bronchitis
broth n
brutal l
buffalo e
buffet n
bulletin n
bumper n
bungalow n
bunch e
buoy n
bureau n
burglar n
burial n
bustle w
bypass e
cafeteria n
caffeine
calcium
calculate w
calculator n
caliber n
calorie n
camouflage w
canary y
cancel v
cancer n
candid l
candidate n
canopy y
capability y
capacity y
capsule n
caption n
captive n
caramel
caravan n
carbohydrate n
cardinal n
cargo e
carnival n
carriage n
cascade w
casserole n
cassette n
casualty y
catalyst n
category y
cathedral n
cautious l
cavity y
cedar n
celery
cellular
census e
ceramic n
certificate n
chandelier n
chaos
chapel n
character n
charcoal
chariot n
charity y
chauffeur n
checkers
cheetah n
chef n
chemist n
chestnut n
chili
chipmunk n
chisel n
chlorine
cholesterol
chrome
chronicle w
cinnamon
cipher n
circular
circulate w
circumference n
citrus
clarify vy
clarity
classify vy
clatter v
clearing n
climax e
clinical l
clockwise
clumsy
coastal
cobalt
cobweb n
cocoa
coconut n
cognitive
coherent l
collapse w
colleague n
collide w
collision n
cologne
colonel n
colossal
combat n
combination n
comedian n
comedy y
commend v
commentary y
commodity y
communicate w
community y
commute w
compact l
companion n
comparison n
compassion
compatible
compel d
compensate w
competent l
compile w
complement n
compliment v n
component n
compound n
comprehend v
compress e vh
compromise w
conceal v
concede w
concentrate w
concise l
condemn v
condense w
condor n
cone n
conference n
confide w
confident l
configure w
congratulate w
conjunction n
conquer v
conscience n
consensus
conserve w
considerable
consistent l
conspiracy y
constitute w
contemplate w
contemporary
contempt
continent n
contour n
contradict v
contribute w
convene w
convenient l
convention n
converge w
converse w
convert v
convey v
convict v
cooperate w
coordinate w
coral n
cordial l
corporate
corridor n
corrupt v
cosmic
cosmos
costly
cougar n
counsel v
countdown n
courtesy y
courtyard n
coyote n
cozy
cramp n
crater n
crawl v
crescent n
crevice n
crisis
criteria
crocodile n
croissant n
crouch e vh
crucial l
cruelty y
crumple w
crusade w
cubicle n
cuisine n
culprit n
cultivate w
cunning
cupcake n
curfew n
curiosity y
curriculum
custody
cyclone n
cylinder n
cynical l
daffodil n
dagger n
dandelion n
daring
darkness
dazzle w
deadline n
debris
debut n
decay v
deceive w
decent l
decimal n
decision n
dedicate w
deduce w
defect n
deficit n
definite l
deflect v
defy vy
delegate w
delete w
deliberate l
delicate l
delight v n
delta n
deluxe
democracy y
demonstrate w
denim
denounce w
dental
depict v
deplete w
deploy v
descend v
descent n
desolate
despair v
desperate l
despite
destination n
destiny y
detach e vh
detain v
detective n
detergent n
deteriorate w
determine w
detour n
devastate w
deviate w
devise w
devour v
diagonal l
dialect n
dialogue n
diameter n
dictate w
diesel
dignity
dilemma n
diligent l
dilute w
dimension n
diminish e vh
dinosaur n
diploma n
diplomat n
disaster n
discard v
discipline w
disclose w
discount v n
discourage w
discreet l
dismal
dismiss e vh
dispatch e vh
dispense w
disperse w
display v n
dispose w
dispute w
disrupt v
dissolve w
distinct l
distinguish e vh
distort v
distract v
distress e
distribute w
diverse
divert v
dividend n
divine
doctrine n
dominant
dominate w
donor n
dormitory y
dosage n
dose n
drastic
dreadful
drench e vh
drizzle w
drought n
dubious l
duplicate w
durable
duration n
dwell v
dynamic
dynasty y
eclipse w
ecology
economy y
ecosystem n
edible
edifice n
educator n
eerie
effective l
efficient l
elaborate l
elastic
elbow n
electron n
eligible
eliminate w
elite
eloquent l
embark v
embassy y
emblem n
embrace w
emerald n
emphasis
emphasize w
employee n
employer n
enable w
enact v
enchant v
encounter v n
encourage w
encyclopedia n
endeavor n
endorse w
endure w
enforce w
enhance w
enigma n
enlist v
enormous l
enroll v
ensemble n
ensure w
enterprise n
enthusiasm
entice w
entity y
envision v
epic n
episode n
equator
equivalent n
errand n
erupt v
escort v
essence n
essential l
establish e vh
eternal l
ethical l
evacuate w
evaluate w
evaporate w
eventual l
evidence
evident l
evolve w
exaggerate w
excavate w
exceptional l
excerpt n
excess
excessive l
exclaim v
exclude w
execute w
executive n
exempt v
exhaust v
exhibit v n
exile w
expedition n
expel d
expire w
explicit l
explode w
exploit v
explosion n
exponent n
exquisite l
extent
exterior n
extinct
extract v
extravagant l
extreme l
fabulous l
facade n
facility y
faculty y
fahrenheit
falcon n
fantastic
fantasy y
fascinate w
fatigue
faucet n
feasible
federal
feeble
feedback
ferocious l
fertile
fiasco n
fidget v
fierce re l
figurative l
filament n
finite
firefly y
fireplace n
firework n
fiscal l
flamingo e
flannel
flare w
flatter v
flaw n
flexible
flicker v
flimsy
flourish e vh
fluent l
fluffy
fluid n
flurry y
flush e vh
foam v
foggy
folklore
forbid
forceps
foremost
forfeit v
forge w
formula n
fort n
forth
fortress e
forum n
fragile
fragrance n
frantic
freight
frenzy
frequency y
friction
frigid
frontier n
frugal l
fulfill v
fumble w
fungus
furious l
fuse w
fusion n
futile
gadget n
gallant l
galore
gamble w
gargoyle n
garment n
garnish e vh
gazette n
gelatin
gene n
generic
genius e
genre n
geography
geology
geometry
germ n
gigantic
gimmick n
glamour
glare w
glimmer v
glimpse w
glisten v
glitter v
gloss e
gossip v
gourmet
gradual l
graduate w
grammar
granite
graphite
grateful
gratitude
gravy
grenade n
grimace w
grit n
grumble w
guarantee w
guardian n
guidance
guild n
gull n
gymnasium n
habitat n
hamper v
hangar n
haphazard l
harass e vh
harmony y
harness e vh
harp n
harsh r l
hasty
hatchet n
haven n
havoc
hazel
headquarters
hearth n
heave w
hectic
hemisphere n
herald v
herb n
heritage
hermit n
heroic
hexagon n
hibernate w
hideous l
hierarchy y
hilarious l
hinder v
hinge w
hoist v
homage
horizontal l
hormone n
hornet n
hospitality
hostage n
hostile
hover v
humid
hurricane n
hybrid n
hydrogen
hygiene
hymn n
hypothesis
icicle n
identical l
idiom n
igloo n
ignite w
illusion n
illustrate w
immense l
immune
imperial
implement v
implicit l
imply vy
impression n
imprint v
impulse n
incentive n
incident n
incline w
indigo
induce w
indulge w
inert
inevitable
infer d
inferior
infinite l
inflate w
influence w
ingredient n
inhabit v
inhale w
inherit v
initiate w
inject v
injury y
inland
inquire w
inscribe w
insight n
insignia
inspiration n
instinct n
institute w
integer n
integrate w
integrity
intellect n
intelligent l
intercept v
intermediate
intersect v
intricate l
intrigue w
intuition n
invade w
invalid
invasion n
inventory y
inverse
invoke w
irrigate w
isolate w
itinerary y
ivory
jagged
jargon
jasmine
javelin n
jeopardy
jersey n
jigsaw n
jolly
jolt v
jostle w
jubilee n
junction n
juncture n
juvenile n
kayak n
keg n
kelp
kiosk n
knack
knoll n
labyrinth n
lagoon n
lament v
landmark n
lantern n
lapse w
lariat n
larva
latitude n
lattice n
lava
lavender
lavish e vh
layout n
leaflet n
ledger n
legacy y
legible
legion n
legislature n
legitimate l
leisure
lemonade
leopard n
lethal
liable
liberal l
liberty y
lifeguard n
lifetime n
ligament n
likewise
lilac n
limestone
limerick n
linear
linger v
linguist n
literal l
literature
litigate w
litter v
livestock
lofty
logical l
longitude n
loom v
lottery y
lullaby y
luminous l
lunar
lure w
lush e
luster
luxury y
lyric n
machinery
magnificent l
magnify vy
magnitude n
mahogany
majestic
majority y
malice
mammoth n
mandate w
maneuver v n
manifest v
manipulate w
manuscript n
marathon n
marvel v
marvelous l
mascot n
masquerade w
massive l
mastery
matrix
maximize w
meager
mechanism n
medieval
mediocre
meditate w
melancholy
mellow r
membrane n
memo n
memorial n
memorize w
mentor n
merchant n
mermaid n
metaphor n
meteor n
metric
metro
microbe n
microphone n
microscope n
migrate w
mimic n
mingle w
miniature n
minimal l
minimize w
mint n
minute l
mirage n
mischief
miser n
missile n
mobilize w
moderate l
molecule n
momentum
monarch n
monopoly y
monument n
morale
mortal l
mosaic n
motivate w
motive n
mundane
municipal
mural n
murmur v
mustang n
mutual l
mythology
narrate w
nautical
navigate w
nebula
nectar
negative l
negotiate w
nitrogen
nocturnal
nominal l
nominate w
nonsense
nostalgia
notable
notify vy
notorious l
nourish e vh
novelty y
nozzle n
nuance n
nucleus
nugget n
nuisance n
numb
numeral n
numerous
nutrition
oasis
obedient l
obituary y
objective l
obligation n
obscure w
obsolete
obstacle n
occupation n
octagon n
offensive l
omen n
ominous l
omit d
opaque
optimal l
optimism
optimize w
oracle n
orator n
orchestra n
ordeal n
ordinance n
organism n
oriental
orientation n
ornate l
orthodox
outback
outbreak n
outcast n
outlet n
outlook n
outpost n
outrage w
outskirts
overcome
overdue
overhaul v
overhead
overlook v
overseas
oversee
overture n
overwhelm v
oxide n
pageant n
pamphlet n
panorama n
pantry y
paradox e
parallel n
paralyze w
paramount
parasite n
parchment n
parliament n
parole w
particular l
passive l
pastel n
patio n
patriot n
patrol d
patron n
peculiar l
pedestal n
pedestrian n
pelican n
penalty y
pendant n
pendulum n
peninsula n
pentagon n
perceive w
perch e vh
perimeter n
peril n
perish e vh
perpetual l
persist v
personnel
perspective n
persuade w
pessimist n
pesticide n
petition v n
petty
pharmacy y
phenomenon
philosophy y
phobia n
phosphorus
physician n
physics
pickle n
pictorial
pigment n
pilgrim n
pillar n
pinnacle n
pistachio n
piston n
pivot v n
placid l
plateau n
platinum
plausible
plaza n
pledge w
plight
plural n
pneumonia
podium n
polygon n
ponder v
populate w
porcelain
portal n
portfolio n
postage
posture n
potent l
potential l
poultry
preach e vh
precaution n
precede w
precinct n
precision
predator n
predicament n
dominate w
premise n
premium n
prescribe w
presence
prestige
presume w
pretext n
prevail v
prevalent
prick v
primitive
principal n
principle n
priority y
pristine
probable
probe w
proclaim v
prodigy y
profound l
prohibit v
projectile n
prominent l
promote w
prone
propel d
prophet n
proportion n
prosecute w
prospect n
prosper v
protocol n
prototype n
province n
provoke w
proximity
prudent l
publication n
pulley n
pulverize w
pursuit n
quaint r l
qualify vy
quarantine w
quartz
quench e vh
query y
quest n
quota n
radiant l
radiate w
radius
ragged
rally y
rampant
rancher n
ransom
rational l
ravine n
realm n
reap v
rebate n
rebuke w
recede w
receipt n
reception n
recess e
recline w
recruit v n
rectangle n
rectify vy
redeem v
refine w
refuge
refund v n
regal l
regime n
regiment n
rehearse w
reign v
rein n
reinforce w
relevant
reluctant l
reminisce w
render v
renown
repel d
repent v
replica n
reproduce w
reptile n
republic n
reputation n
resent v
reside w
residue n
resilient
resolve w
restore w
restrain v
restrict v
retail
retaliate w
retrieve w
revenue n
revere w
revolt v
revolve w
ridicule w
rigorous l
ritual n
roam v
robust l
rogue n
romantic
roster n
rotund
rubble
rudder n
rugged
rupture w
rural
rustic
sabotage w
sacred
sacrifice w
saga n
salvage w
sanctuary y
sapphire n
sarcasm
satellite n
satire n
saturate w
savage l
savor v
scaffold n
scandal n
scenario n
scenic
scholarship n
scrutiny
sculptor n
sculpture n
secluded
sector n
sedan n
sediment n
seminar n
sensation n
sentiment n
sentinel n
serene l
sergeant n
serpent n
serum n
shabby
shackle w
shard n
shrewd l
shrine n
shuffle w
sibling n
siege n
sierra n
silhouette n
simplify vy
simulate w
simultaneous l
sinister
siphon v
skeleton n
skeptic n
slogan n
smolder v
smother v
snorkel n
sophomore n
spacious l
spatial l
spectacle n
spectrum
speculate w
sphere n
spiral n
splendid l
splendor
splinter n
spontaneous l
sporadic
sprawl v
spruce n
squadron n
stagger v
stagnant
stamina
stampede w
stanza n
stark r l
statistic n
stature
statute n
stealth
stellar
sterile
stimulate w
stipend n
strategy y
strenuous l
stride w
strive w
stroll v
subdue w
subsequent l
subsidy y
substantial l
substitute w
subtle
suffice w
sufficient l
suite n
sulfur
summon v
superb l
superior
supplement v n
suppress e vh
surge w
surpass e vh
surplus e
suspend v
sustain v
swivel n
symmetry
sympathy y
symphony y
symptom n
syndrome n
synthesis
syrup
tabulate w
tactic n
talon n
tangent n
tangible
tapestry y
tariff n
tarnish e vh
tavern n
tedious l
temporary
tenant n
tentative l
terminate w
terrain n
terrific
testify vy
theft n
thesis
thrive w
thrust n
timid l
titanic
token n
tolerate w
tornado e
torrent n
toxic
trajectory y
tranquil
transaction n
transcribe w
transit
transmit d
transparent l
trauma n
traverse w
treacherous l
treasury y
treaty y
trek d
tremendous l
tremor n
tributary y
trivial
trombone n
tropical
tuition
tundra
turbine n
turmoil
turquoise
tusk n
tutorial n
twilight
tyrant n
ultimate l
unanimous l
uncanny
undergo
underline w
undermine w
uniform l
unify vy
unison
universal l
uphold
upright
uproar
urgent l
utensil n
utility y
utmost
vacant l
vaccine n
valiant l
valid l
vanilla
vanity
vantage
variable n
vault v n
veer v
vegetation
velocity y
vendor n
veneer n
ventilate w
venue n
veranda n
verbal l
verge w
verify vy
versatile
vertical l
vessel n
veto vh
viable
vibrant l
vibrate w
vicinity
vigil n
vigorous l
villain n
vintage
violate w
virtual l
visa n
visual l
vocabulary y
vogue
volatile
voltage
voucher n
vow v
voyage n
wad n
waft v
wager v
walrus e
warden n
wardrobe n
warrant v n
warrior n
wary
waver v
weld v
welfare
wharf
whim n
wholesale
wilderness
windmill n
wistful l
wither v
woe n
worthy
wrath
wreath n
wrestle w
wince w
yearn v
yeast
yonder
zeal
zenith
zephyr n
zest
zinc
zipper n
""".strip().splitlines()

EXTRA = """
a about above across after again against all almost alone along already also
although always am among an and another any anybody anyone anything anywhere
are around as at away back bad badly be became because become becomes becoming
been before began begins begun behind below beneath beside besides best betray
between beyond both bought break breaks bring brings broke broken brought built
but buy buys by came can cannot caught catch catches catching chose chosen
choose chooses choosing come comes coming could cut cuts cutting did do does
doing done down downward drank drink drinks drive driven drives driving drove
drawn draws drawing drew each eat eats eating eaten ate either else enough even
ever every everybody everyone everything everywhere fall fallen falls falling
fell felt few fight fights fighting fought find finds finding flew fly flies
flying flown for forgot forgotten found from froze frozen gave get gets getting
got given go goes going gone grew grow grown grows growing had has have having
he heard hears hearing held her here hers herself him himself his hold holds
holding how hung i if in into is it its itself just kept knew know known knows
knowing laid lain lay lays laying led left lends lent less let lets letting lie
lies lying lost lot made many may me mean means meant meet meets meeting met
mine more much must my myself no nobody none nor not now nowhere of off on once
one only onto or our ours ourselves out over paid pay pays paying put puts
putting ran rang ride rides riding ridden rode rung said sang sat saw say says
saying see seen sees seeing sold some somebody someone something sometimes
somewhere sang sank sing sings singing sung sunk sit sits sitting so sold
sought spoke spoken speaks speaking spent stand stands standing stood stole
stolen swam swim swims swum take taken takes taking taught teach that the their
theirs them themselves then there these they this those thought threw thrown
throws throwing to told too took tore torn two under understood until up upward
us very was we were what when where which who whom whose why will with within
without woke woken won wore worn would wrote written you your yours yourself
three four five six seven eight nine ten eleven twelve twenty thirty forty
fifty sixty seventy eighty ninety hundred thousand first fifth eighth ninth
twelfth him keeps kept lend inks
""".split()


def expand(word, flags):
    out = [word]
    for f in flags:
        if f == "n":
            out.append(word + "s")
        elif f == "e":
            out.append(word + "es")
        elif f == "y":
            out.append(word[:-1] + "ies")
        elif f == "v":
            out += [word + "s", word + "ed", word + "ing"]
        elif f == "w":
            out += [word + "s", word + "d", word[:-1] + "ing"]
        elif f == "d":
            out += [word + "s", word + word[-1] + "ed", word + word[-1] + "ing"]
        elif f == "vy":
            out += [word[:-1] + "ies", word[:-1] + "ied", word + "ing"]
        elif f == "vh":
            out += [word + "es", word + "ed", word + "ing"]
        elif f == "r":
            out += [word + "er", word + "est"]
        elif f == "re":
            out += [word + "r", word + "st"]
        elif f == "l":
            out.append(word + "ly")
        else:
            raise SystemExit(f"unknown flag {f!r} on {word!r}")
    return out


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "crates/core/assets/words.txt"
    words = set(EXTRA)
    for line in LEMMAS:
        parts = line.split()
        for w in expand(parts[0], parts[1:]):
            words.add(w)
    for w in words:
        if not (w.isascii() and w.isalpha() and w == w.lower()):
            raise SystemExit(f"bad word {w!r}")
    ordered = sorted(words)
    os.makedirs(os.path.dirname(out_path), exist_ok=True)
    with open(out_path, "w") as f:
        f.write("\n".join(ordered) + "\n")
    print(f"wrote {len(ordered)} words -> {out_path}")


if __name__ == "__main__":
    main()
