"""Word lists used to build the bundled tagging lexicon.

Each entry maps a Penn Treebank tag to whitespace-separated words.  Where a
word is listed under several tags the first listing wins, so the most
frequent reading of an ambiguous word goes first in file order.
"""

CLOSED = {
    "DT": """the a an this that these those some any no every each either neither
        another all both half""",
    "PDT": "such",
    "CC": "and or but nor yet plus",
    "IN": """of in on at by for with from into onto upon about above across after
        against along amid among around as before behind below beneath beside besides
        between beyond despite down during except inside like near off out outside over
        past since than through throughout till toward towards under underneath unlike
        until unless via whereas whether while within without although though because
        if once per""",
    "TO": "to",
    "PRP": """i me you he him she her it we us they them myself yourself himself
        herself itself ourselves yourselves themselves one""",
    "PRP$": "my your his its our their",
    "WDT": "which whatever whichever",
    "WP": "who whom what whoever",
    "WP$": "whose",
    "WRB": "when where why how whenever wherever",
    "MD": "can could may might must shall should will would ought cannot",
    "EX": "there",
    "UH": "oh yes hey wow ah hello okay ok alas",
    "RP": "up",
    "POS": "'s",
    "CD": """zero one two three four five six seven eight nine ten eleven twelve thirteen
        fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty
        sixty seventy eighty ninety hundred thousand million billion dozen""",
}

OPEN = {
    "RB": """not n't never always often sometimes usually rarely seldom also just only even
        still already again almost very really quite rather too so extremely truly fairly
        simply nearly hardly barely mostly largely mainly partly perhaps maybe probably
        certainly definitely clearly obviously actually finally eventually soon later
        now then here there today tonight tomorrow yesterday ago away back together
        else ever instead indeed however therefore thus otherwise somewhat anyway
        well badly poorly beautifully perfectly brilliantly painfully slowly quickly
        easily fast once twice abroad overseas nationwide sharply slightly
        steadily strongly widely heavily deeply highly newly recently currently
        reportedly officially initially previously nevertheless meanwhile furthermore
        moreover afterwards apart ahead alone downtown everywhere somewhere anywhere
        nowhere forward upstairs outdoors""",
    "RBR": "more less better worse further faster longer earlier later",
    "RBS": "most least best worst",
    "JJ": """good great bad new old big small large little long short high low young
        early late important different same other right wrong real full free
        sure clear whole able common hard easy possible likely main major minor recent
        certain strong weak huge tiny local national international public private
        political economic social financial global foreign domestic federal military
        human natural physical mental medical legal final original special general
        single simple open close dark light hot cold warm cool rich poor cheap expensive
        happy sad angry afraid nice fine beautiful ugly pretty awful terrible wonderful
        excellent perfect brilliant superb fantastic amazing incredible remarkable
        outstanding superior inferior average typical usual unusual strange odd
        familiar popular famous quiet loud soft smooth rough busy empty ready alive
        dead serious funny clever smart stupid silly dull boring interesting exciting
        thrilling gripping moving touching stunning charming delightful lovely
        memorable enjoyable engaging compelling powerful fresh witty magnificent
        terrific splendid heartfelt inspired graceful thoughtful dreadful tedious
        clumsy bland lazy pointless horrible mediocre painful forgettable messy flat
        shallow annoying predictable tiresome lifeless sloppy ridiculous awkward
        crowded quarterly annual daily weekly monthly digital online mobile wireless
        scientific technical technological chemical solar lunar nuclear electric
        orbital genetic rapid steady sharp modest solid net gross total entire
        rural urban northern southern eastern western central coastal historic
        historical ancient modern classic classical elderly junior senior chief
        independent separate various several many few much such own only
        unexpected dramatic romantic comic tragic violent bloody gentle quiet calm
        bright vivid subtle obvious complex complete correct accurate proper
        official formal chilly sunny rainy snowy regional widespread stable volatile
        profitable bankrupt jobless unemployed retail wholesale corporate industrial
        commercial agricultural renewable clean dirty safe dangerous risky secure
        fragile healthy sick ill tired wild strict loose tight narrow wide deep thin
        thick heavy main extra additional previous next last first second third
        middle upper lower inner outer top bottom front overall key vital""",
    "JJR": """bigger smaller larger older younger newer higher lower stronger weaker
        greater cheaper richer poorer easier harder shorter longer warmer colder
        happier sadder funnier darker brighter""",
    "JJS": """biggest smallest largest oldest youngest newest highest lowest strongest
        weakest greatest cheapest richest easiest hardest shortest longest warmest
        coldest happiest funniest darkest brightest""",
    "VB": """be have do say get make go know take see come think look want give use find
        tell ask work seem feel try leave call keep let begin help talk turn start show
        hear play run move like live believe hold bring happen write provide sit stand
        lose pay meet include continue set learn change lead understand watch follow
        stop create speak read allow add spend grow open walk win offer remember love
        consider appear buy wait serve die send expect build stay fall cut reach kill
        remain suggest raise pass sell require report decide pull recommend enjoy hate
        avoid miss skip rent""",
    "VBP": "am are have do",
    "VBZ": """is has does says gets makes goes knows takes sees comes thinks looks wants
        gives uses finds tells asks works seems feels tries leaves calls keeps lets
        begins helps talks turns starts shows hears plays runs moves likes lives
        believes holds brings happens writes provides stands loses pays meets includes
        continues sets learns changes leads follows stops creates reads adds spends
        grows opens wins offers remains reports plans expects rises falls sells buys
        raises cuts reaches announces launches signs beats""",
    "VBD": """was were had did said got made went knew took saw came thought looked wanted
        gave used found told asked worked seemed felt tried left called kept began
        helped talked turned started showed heard played ran moved liked lived believed
        held brought happened wrote provided sat stood lost paid met included continued
        learned changed led understood watched followed stopped created spoke allowed
        added spent grew opened walked won offered remembered loved considered appeared
        bought waited served died sent expected built stayed fell reached killed
        remained suggested raised passed sold required reported decided pulled
        recommended enjoyed hated adored admired disliked regretted loathed released
        directed produced announced launched signed beat rose dropped climbed jumped
        surged slipped posted scored defeated claimed captured elected agreed
        discovered developed unveiled hired fired acquired merged filed warned
        urged rejected approved""",
    "VBN": """been done gone known taken seen given shown written begun grown thrown
        spoken broken chosen driven eaten fallen forgotten hidden ridden risen stolen
        sworn torn worn beaten""",
    "VBG": """being having doing saying getting making going taking seeing coming thinking
        looking using finding working trying leaving calling keeping playing running
        moving living holding bringing writing standing watching following including
        growing rising falling during""",
    "NN": """time year way day man thing woman life child world school state family
        student group country problem hand part place case week company system program
        question work government number night point home water room mother area money
        story fact month lot right study book eye job word business issue side kind
        head house service friend father power hour game line end member law car city
        community name president team minute idea kid body information back parent face
        level office door health person art war history party result change
        morning reason research girl guy moment air teacher force education film movie
        drama thriller comedy western musical documentary romance sequel remake cinema
        theater festival mall screen acting plot script cast soundtrack score dialogue
        ending pacing direction cinematography editing lead villain hero humor
        photography music performance role scene character director actor actress
        writer producer studio audience critic review viewer sister brother wife
        husband roommate cousin neighbor colleague masterpiece gem triumph delight treat
        mess disaster failure letdown waste season summer winter spring autumn fall
        weekend evening afternoon soldier detective nurse doctor lawyer farmer
        painter singer teacher pilot chef journalist widow orphan stranger town village
        island journey marriage divorce accident trip move career budget tone premise
        twist climax finale runtime theme message mood setting atmosphere sound
        camera light color footage trailer ticket popcorn seat market stock share
        price profit revenue sales economy bank firm industry trade deal merger
        investor quarter growth rate inflation oil gas energy loss debt tax budget
        earnings dollar euro yen index demand supply retailer manufacturer factory
        worker chief executive officer board match goal coach player league title
        championship tournament cup final victory defeat win loss striker midfielder
        goalkeeper pitcher quarterback season race driver lap medal record stadium
        fan club squad injury contract transfer science technology software hardware
        computer phone internet network data device chip processor battery satellite
        rocket space planet telescope laboratory researcher scientist experiment
        discovery vaccine virus disease gene species climate carbon robot algorithm
        app update version security breach hacker website browser server election
        minister parliament vote leader capital border army troop rebel protest
        ceasefire treaty summit embassy diplomat crisis conflict refugee aid
        president prime police attack bomb peace official spokesman nation region
        province""",
    "NNS": """years people days things children students groups countries problems hands
        parts places cases weeks companies systems questions numbers points areas
        stories facts months books eyes jobs words issues kinds friends hours games
        lines members cities names minutes ideas kids parents others results changes
        reasons girls guys moments teachers films movies dramas thrillers comedies
        scenes characters actors actresses writers critics viewers effects visuals
        performances jokes songs costumes sets twists moments fans shares stocks prices
        profits sales markets banks firms investors earnings dollars rates goods
        workers players coaches teams matches goals points titles medals records
        fans injuries scientists researchers computers phones devices chips satellites
        planets vaccines species robots apps elections ministers leaders troops rebels
        protests talks refugees officials nations regions forces rivals games
        details hopes fears plans losses gains""",
    "NNP": """Monday Tuesday Wednesday Thursday Friday Saturday Sunday January February
        March April May June July August September October November December
        Boston Chicago Denver Paris London Berlin Toronto Madrid Tokyo Sydney Moscow
        Beijing Cairo Delhi Rome Seattle Dallas Miami Atlanta Vienna Athens Lagos
        America Europe Asia Africa China Japan India Russia France Germany Britain
        Canada Brazil Mexico Spain Italy Egypt Iran Iraq Israel Ukraine Australia
        England Scotland Ireland Korea
        God Alice Smith Jones Brown Taylor Walker Harris Clark Lewis Young King Hughes
        Morgan Parker Evans Turner Collins Reed Cooper Ward Foster Price Bennett
        Sarah Emma Anna James John David Michael Robert Daniel Thomas Laura Maria
        Hollywood NASA Google Apple Microsoft Amazon Intel Samsung Sony Toyota
        Reuters UN NATO EU FIFA NBA NFL Olympics Nasdaq Dow Fed Congress Senate
        Street Wall Mr Mrs Dr St""",
}
