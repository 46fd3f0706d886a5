/** Word lists backing the heuristic taggers.  Weather/news-domain heavy,
 * which is where caption-derived monolingual text comes from. */

export interface Lexicon {
  determiners: Set<string>;
  pronouns: Set<string>;
  adpositions: Set<string>;
  auxiliaries: Set<string>;
  particles: Set<string>;
  coordinators: Set<string>;
  subordinators: Set<string>;
  adverbs: Set<string>;
  /** uninflected adjective stems that no suffix rule can recognize */
  adjectives: Set<string>;
  numberWords: Set<string>;
  /** surface form -> lemma, for irregular inflection */
  lemmaExceptions: Map<string, string>;
  /** capitalized surface -> entity label */
  gazetteer: Map<string, "LOC" | "PER" | "ORG">;
  /** location entries that are proper nouns rather than common nouns */
  properLocations: Set<string>;
}

const s = (words: string) => new Set(words.split(/\s+/).filter(Boolean));

const GERMAN_LEMMA_EXCEPTIONS: [string, string][] = [
  ["ist", "sein"], ["sind", "sein"], ["war", "sein"], ["waren", "sein"],
  ["bin", "sein"], ["bist", "sein"], ["seid", "sein"],
  ["hat", "haben"], ["habe", "haben"], ["hast", "haben"], ["hatte", "haben"], ["hatten", "haben"],
  ["wird", "werden"], ["werde", "werden"], ["wurde", "werden"], ["wurden", "werden"],
  ["kann", "können"], ["konnte", "können"], ["muss", "müssen"], ["musste", "müssen"],
  ["will", "wollen"], ["wollte", "wollen"], ["soll", "sollen"], ["sollte", "sollen"],
  ["darf", "dürfen"], ["mag", "mögen"], ["möchte", "mögen"],
  ["gibt", "geben"], ["geht", "gehen"], ["gehst", "gehen"], ["kommt", "kommen"],
  ["regnet", "regnen"], ["scheint", "scheinen"], ["schneit", "schneien"],
  ["weht", "wehen"], ["bleibt", "bleiben"], ["steigt", "steigen"],
  ["sinkt", "sinken"], ["fällt", "fallen"], ["zieht", "ziehen"],
  ["beißt", "beißen"], ["läuft", "laufen"], ["sieht", "sehen"],
  ["liegt", "liegen"], ["steht", "stehen"], ["lässt", "lassen"],
  ["der", "der"], ["die", "der"], ["das", "der"], ["den", "der"],
  ["dem", "der"], ["des", "der"],
  ["ein", "ein"], ["eine", "ein"], ["einen", "ein"], ["einem", "ein"],
  ["einer", "ein"], ["eines", "ein"],
  ["kein", "kein"], ["keine", "kein"], ["keinen", "kein"], ["keinem", "kein"],
  ["keiner", "kein"], ["keines", "kein"],
];

const GERMAN_GAZETTEER: [string, "LOC" | "PER" | "ORG"][] = [
  ["Süden", "LOC"], ["Norden", "LOC"], ["Osten", "LOC"], ["Westen", "LOC"],
  ["Südwesten", "LOC"], ["Südosten", "LOC"], ["Nordwesten", "LOC"], ["Nordosten", "LOC"],
  ["Bayern", "LOC"], ["Berlin", "LOC"], ["Hamburg", "LOC"], ["München", "LOC"],
  ["Köln", "LOC"], ["Frankfurt", "LOC"], ["Sachsen", "LOC"], ["Hessen", "LOC"],
  ["Brandenburg", "LOC"], ["Thüringen", "LOC"], ["Deutschland", "LOC"],
  ["Österreich", "LOC"], ["Schweiz", "LOC"], ["Europa", "LOC"],
  ["Alpen", "LOC"], ["Rhein", "LOC"], ["Elbe", "LOC"], ["Donau", "LOC"],
  ["Ostsee", "LOC"], ["Nordsee", "LOC"], ["Harz", "LOC"],
  ["Tagesschau", "ORG"], ["Wetterdienst", "ORG"],
];

export const GERMAN: Lexicon = {
  determiners: s(`der die das den dem des ein eine einen einem einer eines
    kein keine keinen keinem keiner keines dieser diese dieses diesen diesem
    jeder jede jedes jene mein meine dein sein seine ihr ihre unser unsere
    mancher manche welche welcher viele vielen einige einigen beide beiden`),
  pronouns: s(`ich du er sie es wir ihr man mich dich ihn uns euch ihm ihnen
    sich wer was jemand niemand nichts etwas alles dies`),
  adpositions: s(`in im am an ans auf aus bei beim mit nach von vom zu zum zur
    über unter vor hinter neben zwischen durch für gegen ohne um ab seit bis
    entlang innerhalb außerhalb trotz wegen während laut gemäß`),
  auxiliaries: s(`ist sind war waren bin bist seid sein hat haben habe hast
    hatte hatten wird werden werde wurde wurden kann können konnte muss müssen
    musste soll sollen sollte will wollen wollte darf dürfen durfte mag möchte`),
  particles: s(`nicht zu`),
  coordinators: s(`und oder aber denn sondern sowie`),
  subordinators: s(`dass weil wenn ob als während obwohl damit bevor nachdem falls`),
  adverbs: s(`heute morgen gestern übermorgen vorgestern hier dort da dann
    danach davor sehr auch noch schon nur wieder immer nie niemals oft selten
    bald jetzt nun meist teils örtlich vielerorts gebietsweise zeitweise
    vereinzelt voraussichtlich deshalb dazu sonst leider bereits besonders
    etwa kaum fast mehr weniger ganz dabei dennoch trotzdem außerdem`),
  adjectives: s(`kalt warm stark schwach mild kräftig heiter trüb nass trocken
    frisch kühl heiß klar neu gut schön groß klein lang kurz hoch tief spät
    früh dicht schwer leicht wechselhaft unsicher`),
  numberWords: s(`null eins zwei drei vier fünf sechs sieben acht neun zehn
    elf zwölf dreizehn vierzehn fünfzehn zwanzig dreißig vierzig fünfzig
    sechzig siebzig achtzig neunzig hundert tausend`),
  lemmaExceptions: new Map(GERMAN_LEMMA_EXCEPTIONS),
  gazetteer: new Map(GERMAN_GAZETTEER),
  properLocations: s(`Bayern Berlin Hamburg München Köln Frankfurt Sachsen
    Hessen Brandenburg Thüringen Deutschland Österreich Schweiz Europa Alpen
    Rhein Elbe Donau Ostsee Nordsee Harz`),
};

const ENGLISH_LEMMA_EXCEPTIONS: [string, string][] = [
  ["is", "be"], ["are", "be"], ["was", "be"], ["were", "be"], ["been", "be"],
  ["am", "be"], ["has", "have"], ["had", "have"], ["does", "do"], ["did", "do"],
  ["goes", "go"], ["went", "go"], ["comes", "come"], ["came", "come"],
  ["rains", "rain"], ["snows", "snow"], ["shines", "shine"],
];

export const ENGLISH: Lexicon = {
  determiners: s(`the a an this that these those each every some any no my
    your his her its our their`),
  pronouns: s(`i you he she it we they me him us them himself herself itself
    who what someone nobody nothing everything`),
  adpositions: s(`in on at of to with from by for about over under between
    through during after before against without near`),
  auxiliaries: s(`is are was were be been am has have had will would can could
    shall should may might must do does did`),
  particles: s(`not to`),
  coordinators: s(`and or but nor so yet`),
  subordinators: s(`that because if while although since unless until when`),
  adverbs: s(`today tomorrow yesterday here there now then very also still
    already often never always soon almost quite rather especially mostly`),
  adjectives: s(`cold warm strong weak mild heavy light wet dry fresh cool hot
    clear new good big small long short high low late early`),
  numberWords: s(`zero one two three four five six seven eight nine ten eleven
    twelve twenty thirty forty fifty sixty seventy eighty ninety hundred thousand`),
  lemmaExceptions: new Map(ENGLISH_LEMMA_EXCEPTIONS),
  gazetteer: new Map([
    ["London", "LOC"], ["Boston", "LOC"], ["America", "LOC"], ["Europe", "LOC"],
    ["England", "LOC"], ["Germany", "LOC"],
  ]),
  properLocations: s(`London Boston America Europe England Germany`),
};

/** Constituent dictionary for the greedy German compound splitter, with
 * rough corpus frequencies; higher wins on ties between split points. */
export const GERMAN_COMPOUND_PARTS: Map<string, number> = new Map(
  Object.entries({
    wetter: 90, bericht: 60, regen: 80, schauer: 55, wind: 70, sturm: 50,
    sonne: 60, schein: 40, wolke: 40, wolken: 45, schnee: 60, tag: 70,
    nacht: 60, woche: 50, wochen: 55, ende: 65, land: 60, karte: 40,
    lage: 45, dienst: 40, vorhersage: 50, gewitter: 50, nebel: 40,
    frost: 35, boden: 35, luft: 45, druck: 40, gebiet: 45, temperatur: 50,
    grad: 40, meer: 35, see: 30, küste: 40, berg: 40, tal: 30, feld: 30,
    haus: 50, stadt: 50, nachrichten: 40, sendung: 35, zeit: 50, jahr: 55,
    fall: 30, ball: 30, fuß: 35, hand: 30, werk: 30, schule: 30,
  }),
);
