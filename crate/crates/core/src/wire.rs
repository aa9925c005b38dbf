//! The zero-terminated text query protocol and its TCP service.
//!
//! A client sends one UTF-8 query such as `ru_noun;машина;cr;nx` followed by
//! a zero byte and receives the answer, also zero-terminated; the server
//! then closes the connection. Failures come back as `ERR:<CODE>`.

use std::fmt;
use std::io::{self, Read, Write};
use std::net::{Shutdown, SocketAddr, TcpListener, TcpStream, ToSocketAddrs};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread::{self, JoinHandle};
use std::time::Duration;

use crate::error::Error;
use crate::grammeme::{parse_code, Animacy, Case, Gender, Grammeme, NumberCat, NumeralKind, Tense};
use crate::verb::ParticipleKind;
use crate::Engine;

pub const DEFAULT_PORT: u16 = 9999;
/// Stalled connections are dropped after this long without data.
pub const READ_TIMEOUT: Duration = Duration::from_secs(8);
/// Longest accepted query, terminator excluded.
pub const MAX_QUERY_BYTES: usize = 4096;

/// Query functions. The last three are extensions beyond the original set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    Verb,
    Noun,
    Adjective,
    Adverb,
    Numeral,
    Participle,
    Gerund,
    Imperative,
}

impl Function {
    pub const ALL: [Function; 8] = [
        Function::Verb,
        Function::Noun,
        Function::Adjective,
        Function::Adverb,
        Function::Numeral,
        Function::Participle,
        Function::Gerund,
        Function::Imperative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Function::Verb => "ru_verb",
            Function::Noun => "ru_noun",
            Function::Adjective => "ru_adjective",
            Function::Adverb => "ru_adverb",
            Function::Numeral => "ru_numeral",
            Function::Participle => "ru_participle",
            Function::Gerund => "ru_gerund",
            Function::Imperative => "ru_imperative",
        }
    }

    pub fn from_name(name: &str) -> Option<Function> {
        Function::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub function: Function,
    pub args: Vec<String>,
}

impl Query {
    pub fn new(function: Function, args: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Query { function, args: args.into_iter().map(Into::into).collect() }
    }

    /// The query text without the terminator.
    pub fn to_text(&self) -> String {
        let mut parts = vec![self.function.name().to_string()];
        parts.extend(self.args.iter().cloned());
        parts.join(";")
    }

    /// Wire bytes, terminator included.
    pub fn encode(&self) -> Vec<u8> {
        let mut bytes = self.to_text().into_bytes();
        bytes.push(0);
        bytes
    }
}

/// Protocol-level failure codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    /// No terminating zero byte, a zero byte inside the query, or too long.
    Frame,
    Encoding,
    Empty,
    UnknownFunction,
    Args,
    Code,
    Word,
    Absent,
    Range,
    Internal,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Frame => "FRAME",
            ErrorCode::Encoding => "ENCODING",
            ErrorCode::Empty => "EMPTY",
            ErrorCode::UnknownFunction => "FUNC",
            ErrorCode::Args => "ARGS",
            ErrorCode::Code => "CODE",
            ErrorCode::Word => "WORD",
            ErrorCode::Absent => "ABSENT",
            ErrorCode::Range => "RANGE",
            ErrorCode::Internal => "INTERNAL",
        }
    }
}

impl From<&Error> for ErrorCode {
    fn from(e: &Error) -> Self {
        match e {
            Error::EmptyInput | Error::InvalidCharacters(_) | Error::InvalidLemma { .. } => ErrorCode::Word,
            Error::UnknownCode(_) | Error::UnknownPos(_) | Error::UnknownMutation(_) => ErrorCode::Code,
            Error::FormAbsent { .. } | Error::NotPerfective(_) | Error::NoDegree(_) => ErrorCode::Absent,
            Error::OutOfRange(_) => ErrorCode::Range,
            Error::MalformedFormula(_) => ErrorCode::Args,
            Error::BadTable { .. } | Error::Io { .. } | Error::EmptyCorpus(_) => ErrorCode::Internal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Response {
    Ok(String),
    Err(ErrorCode),
}

impl Response {
    /// The response text: the form, or `ERR:<CODE>`.
    pub fn text(&self) -> String {
        match self {
            Response::Ok(s) => s.clone(),
            Response::Err(code) => format!("ERR:{}", code.as_str()),
        }
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut bytes = self.text().into_bytes();
        bytes.retain(|&b| b != 0);
        bytes.push(0);
        bytes
    }
}

impl From<Result<String, ErrorCode>> for Response {
    fn from(r: Result<String, ErrorCode>) -> Self {
        match r {
            Ok(s) => Response::Ok(s),
            Err(c) => Response::Err(c),
        }
    }
}

/// Splits raw bytes (terminator included) into a query.
pub fn decode_query(bytes: &[u8]) -> Result<Query, ErrorCode> {
    let body = match bytes.split_last() {
        Some((0, body)) => body,
        _ => return Err(ErrorCode::Frame),
    };
    if body.contains(&0) || body.len() > MAX_QUERY_BYTES {
        return Err(ErrorCode::Frame);
    }
    let text = std::str::from_utf8(body).map_err(|_| ErrorCode::Encoding)?;
    if text.trim().is_empty() {
        return Err(ErrorCode::Empty);
    }
    let mut fields = text.split(';');
    let name = fields.next().unwrap_or_default().trim();
    let function = Function::from_name(name).ok_or(ErrorCode::UnknownFunction)?;
    Ok(Query { function, args: fields.map(|f| f.trim().to_string()).collect() })
}

/// Grammeme codes collected from the arguments after the word, one per
/// category; repeats and unknown tokens are rejected.
#[derive(Debug, Default)]
struct Codes {
    person: Option<crate::grammeme::Person>,
    number: Option<NumberCat>,
    gender: Option<Gender>,
    tense: Option<Tense>,
    case: Option<Case>,
    animacy: Option<Animacy>,
    degree: Option<crate::grammeme::Degree>,
    kind: Option<NumeralKind>,
}

fn set<T>(slot: &mut Option<T>, v: T) -> Result<(), ErrorCode> {
    if slot.is_some() {
        return Err(ErrorCode::Args);
    }
    *slot = Some(v);
    Ok(())
}

impl Codes {
    fn parse(tokens: &[String]) -> Result<Codes, ErrorCode> {
        let mut c = Codes::default();
        for t in tokens {
            match parse_code(t).map_err(|_| ErrorCode::Code)? {
                Grammeme::Person(v) => set(&mut c.person, v)?,
                Grammeme::Number(v) => set(&mut c.number, v)?,
                Grammeme::Gender(v) => set(&mut c.gender, v)?,
                Grammeme::Tense(v) => set(&mut c.tense, v)?,
                Grammeme::Case(v) => set(&mut c.case, v)?,
                Grammeme::Animacy(v) => set(&mut c.animacy, v)?,
                Grammeme::Degree(v) => set(&mut c.degree, v)?,
                Grammeme::NumeralKind(v) => set(&mut c.kind, v)?,
            }
        }
        Ok(c)
    }

    /// Fails unless only the allowed categories were given.
    fn only(&self, allowed: &str) -> Result<(), ErrorCode> {
        let present = [
            ('p', self.person.is_some()),
            ('n', self.number.is_some()),
            ('g', self.gender.is_some()),
            ('t', self.tense.is_some()),
            ('c', self.case.is_some()),
            ('a', self.animacy.is_some()),
            ('f', self.degree.is_some()),
            ('k', self.kind.is_some()),
        ];
        if present.iter().any(|&(ch, set)| set && !allowed.contains(ch)) {
            Err(ErrorCode::Args)
        } else {
            Ok(())
        }
    }
}

fn need<T>(v: Option<T>) -> Result<T, ErrorCode> {
    v.ok_or(ErrorCode::Args)
}

fn participle_kind(token: &str) -> Option<ParticipleKind> {
    match token {
        "act-pres" | "pres-act" => Some(ParticipleKind::PresentActive),
        "act-past" | "past-act" => Some(ParticipleKind::PastActive),
        "pass-past" | "past-pass" => Some(ParticipleKind::PastPassive),
        _ => None,
    }
}

fn run(engine: &Engine, q: &Query) -> Result<String, ErrorCode> {
    let word = q.args.first().ok_or(ErrorCode::Args)?.as_str();
    let rest = &q.args[1.min(q.args.len())..];
    let engine_err = |e: Error| ErrorCode::from(&e);
    match q.function {
        Function::Noun => {
            let c = Codes::parse(rest)?;
            c.only("nc")?;
            let w = engine.inflect_noun(word, need(c.number)?, need(c.case)?).map_err(engine_err)?;
            Ok(w.into_string())
        }
        Function::Verb => {
            let c = Codes::parse(rest)?;
            c.only("pngt")?;
            let w = engine
                .conjugate(word, need(c.person)?, need(c.number)?, need(c.gender)?, need(c.tense)?)
                .map_err(engine_err)?;
            Ok(w.into_string())
        }
        Function::Adjective => {
            let c = Codes::parse(rest)?;
            c.only("ngca")?;
            let w = engine
                .inflect_adjective(
                    word,
                    need(c.number)?,
                    need(c.gender)?,
                    need(c.case)?,
                    c.animacy.unwrap_or(Animacy::Inanimate),
                )
                .map_err(engine_err)?;
            Ok(w.into_string())
        }
        Function::Adverb => {
            let c = Codes::parse(rest)?;
            c.only("f")?;
            Ok(engine.adverb_degree(word, need(c.degree)?).map_err(engine_err)?.into_string())
        }
        Function::Numeral => {
            let c = Codes::parse(rest)?;
            c.only("kcg")?;
            let case = c.case.unwrap_or(Case::Nom);
            let gender = c.gender.unwrap_or(Gender::M);
            let number = |s: &str| s.parse::<u32>().map_err(|_| ErrorCode::Range);
            match need(c.kind)? {
                NumeralKind::Cardinal => {
                    crate::numeral::cardinal_words(number(word)?, case, gender).map_err(engine_err)
                }
                NumeralKind::Ordinal => engine.ordinal_words(number(word)?, gender, case).map_err(engine_err),
                NumeralKind::Fractional => {
                    let (a, b) = word.split_once('/').ok_or(ErrorCode::Args)?;
                    engine.fraction_words(number(a)?, number(b)?, case).map_err(engine_err)
                }
            }
        }
        Function::Participle => {
            let kind = participle_kind(rest.first().ok_or(ErrorCode::Args)?).ok_or(ErrorCode::Code)?;
            let c = Codes::parse(&rest[1..])?;
            c.only("ngca")?;
            let lemma = engine.participle_lemma(word, kind).map_err(engine_err)?;
            let w = engine
                .inflect_adjective(
                    lemma.as_str(),
                    need(c.number)?,
                    need(c.gender)?,
                    need(c.case)?,
                    c.animacy.unwrap_or(Animacy::Inanimate),
                )
                .map_err(engine_err)?;
            Ok(w.into_string())
        }
        Function::Gerund => {
            let c = Codes::parse(rest)?;
            c.only("t")?;
            let w = match c.tense {
                Some(Tense::Past) => engine.past_gerund(word),
                Some(Tense::Present) => engine.imperfective_gerund(word),
                Some(Tense::Future) => return Err(ErrorCode::Args),
                None => match engine.get_perfectness(word).map_err(engine_err)? {
                    crate::verb::Aspect::Perfective => engine.perfective_gerund(word),
                    _ => engine.imperfective_gerund(word),
                },
            };
            Ok(w.map_err(engine_err)?.into_string())
        }
        Function::Imperative => {
            let c = Codes::parse(rest)?;
            c.only("n")?;
            Ok(engine.imperative(word, need(c.number)?).map_err(engine_err)?.into_string())
        }
    }
}

/// Routes a decoded query to the engine. Never panics outward.
pub fn dispatch(engine: &Engine, query: &Query) -> Response {
    match catch_unwind(AssertUnwindSafe(|| run(engine, query))) {
        Ok(r) => r.into(),
        Err(_) => Response::Err(ErrorCode::Internal),
    }
}

/// Decodes and dispatches one framed query.
pub fn handle_bytes(engine: &Engine, bytes: &[u8]) -> Response {
    match decode_query(bytes) {
        Ok(q) => dispatch(engine, &q),
        Err(code) => Response::Err(code),
    }
}

/// Reads up to and including the first zero byte.
fn read_frame(stream: &mut TcpStream) -> io::Result<Vec<u8>> {
    let mut buf = Vec::with_capacity(64);
    let mut chunk = [0u8; 512];
    loop {
        let n = stream.read(&mut chunk)?;
        if n == 0 {
            return Ok(buf);
        }
        if let Some(pos) = chunk[..n].iter().position(|&b| b == 0) {
            buf.extend_from_slice(&chunk[..=pos]);
            return Ok(buf);
        }
        buf.extend_from_slice(&chunk[..n]);
        if buf.len() > MAX_QUERY_BYTES {
            return Ok(buf);
        }
    }
}

fn serve_connection(engine: &Engine, mut stream: TcpStream, timeout: Duration) -> io::Result<()> {
    stream.set_read_timeout(Some(timeout))?;
    stream.set_write_timeout(Some(timeout))?;
    let frame = read_frame(&mut stream)?;
    let response = handle_bytes(engine, &frame);
    stream.write_all(&response.encode())?;
    stream.flush()?;
    let _ = stream.shutdown(Shutdown::Both);
    Ok(())
}

/// A bound listener; [`Server::run`] blocks, [`Server::spawn`] runs it on a
/// background thread.
pub struct Server {
    listener: TcpListener,
    engine: Engine,
    timeout: Duration,
    stop: Arc<AtomicBool>,
}

impl Server {
    pub fn bind(addr: impl ToSocketAddrs, engine: Engine) -> io::Result<Server> {
        Ok(Server {
            listener: TcpListener::bind(addr)?,
            engine,
            timeout: READ_TIMEOUT,
            stop: Arc::new(AtomicBool::new(false)),
        })
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn local_addr(&self) -> io::Result<SocketAddr> {
        self.listener.local_addr()
    }

    /// Accepts connections until stopped, one thread per connection.
    pub fn run(self) -> io::Result<()> {
        for stream in self.listener.incoming() {
            if self.stop.load(Ordering::SeqCst) {
                break;
            }
            let stream = match stream {
                Ok(s) => s,
                Err(e) => {
                    log::warn!("accept failed: {e}");
                    continue;
                }
            };
            let engine = self.engine.clone();
            let timeout = self.timeout;
            thread::spawn(move || {
                let peer = stream.peer_addr().ok();
                if let Err(e) = serve_connection(&engine, stream, timeout) {
                    log::debug!("connection {peer:?}: {e}");
                }
            });
        }
        Ok(())
    }

    pub fn spawn(self) -> io::Result<ServerHandle> {
        let addr = self.local_addr()?;
        let stop = self.stop.clone();
        let thread = thread::spawn(move || self.run());
        Ok(ServerHandle { addr, stop, thread: Some(thread) })
    }
}

/// A running background server; stops when dropped.
pub struct ServerHandle {
    addr: SocketAddr,
    stop: Arc<AtomicBool>,
    thread: Option<JoinHandle<io::Result<()>>>,
}

impl ServerHandle {
    pub fn addr(&self) -> SocketAddr {
        self.addr
    }

    pub fn stop(&mut self) {
        if let Some(t) = self.thread.take() {
            self.stop.store(true, Ordering::SeqCst);
            // Wake the blocking accept.
            let _ = TcpStream::connect(self.addr);
            let _ = t.join();
        }
    }
}

impl Drop for ServerHandle {
    fn drop(&mut self) {
        self.stop();
    }
}

/// Sends raw bytes and returns the response without its terminator.
pub fn send_raw(addr: impl ToSocketAddrs, bytes: &[u8], timeout: Duration) -> io::Result<Vec<u8>> {
    let mut stream = TcpStream::connect(addr)?;
    stream.set_read_timeout(Some(timeout))?;
    stream.write_all(bytes)?;
    // Unterminated payloads end at EOF rather than at the read timeout.
    stream.shutdown(Shutdown::Write)?;
    let mut out = Vec::new();
    stream.read_to_end(&mut out)?;
    if out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

/// Sends one query text (the terminator is added) and returns the answer.
pub fn query(addr: impl ToSocketAddrs, text: &str, timeout: Duration) -> io::Result<String> {
    let mut bytes = text.as_bytes().to_vec();
    bytes.push(0);
    let out = send_raw(addr, &bytes, timeout)?;
    String::from_utf8(out).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ask(text: &str) -> String {
        let mut bytes = text.as_bytes().to_vec();
        bytes.push(0);
        handle_bytes(&Engine::builtin(), &bytes).text()
    }

    #[test]
    fn decodes() {
        let q = decode_query("ru_noun;машина;cr;nx\0".as_bytes()).unwrap();
        assert_eq!(q, Query::new(Function::Noun, ["машина", "cr", "nx"]));
        let q = decode_query("ru_numeral;11/12;frac\0".as_bytes()).unwrap();
        assert_eq!(q.args, ["11/12", "frac"]);
        assert_eq!(decode_query(b"\0"), Err(ErrorCode::Empty));
        assert_eq!(decode_query(b"ru_noun"), Err(ErrorCode::Frame));
        assert_eq!(decode_query(b"\xff\0"), Err(ErrorCode::Encoding));
    }

    #[test]
    fn encode_decode_identity() {
        let q = Query::new(Function::Verb, ["изучить", "p3", "n1", "gm", "tc"]);
        assert_eq!(decode_query(&q.encode()).unwrap(), q);
    }

    #[test]
    fn examples() {
        assert_eq!(ask("ru_noun;машина;cr;nx"), "машин");
        assert_eq!(ask("ru_verb;изучить;p3;n1;gm;tc"), "изучит");
        assert_eq!(ask("ru_adjective;русский;nx;gf;ti;na"), "русскими");
        assert_eq!(ask("ru_adverb;быстро;fc"), "быстрее");
        assert_eq!(ask("ru_numeral;24;card"), "двадцать четыре");
        assert_eq!(ask("ru_numeral;7;ordi"), "седьмой");
        assert_eq!(ask("ru_numeral;11/12;frac"), "одиннадцать двенадцатых");
        assert_eq!(ask("ru_imperative;читать;nx"), "читайте");
        assert_eq!(ask("ru_gerund;прочитать"), "прочитав");
        assert_eq!(ask("ru_participle;читать;act-pres;n1;gf;ci"), "читающая");
    }

    #[test]
    fn any_argument_order() {
        assert_eq!(ask("ru_noun;машина;nx;cr"), "машин");
    }

    #[test]
    fn errors() {
        assert_eq!(ask("ru_noun;машина;cr"), "ERR:ARGS");
        assert_eq!(ask("ru_noun;машина;cr;zz"), "ERR:CODE");
        assert_eq!(ask("ru_foo;машина"), "ERR:FUNC");
        assert_eq!(ask("ru_noun;machine;cr;nx"), "ERR:WORD");
        assert_eq!(ask("ru_noun;машина;cr;cd"), "ERR:ARGS");
        assert_eq!(ask("ru_numeral;12000;card"), "ERR:RANGE");
    }

    #[test]
    fn tcp_round_trip() {
        let server = Server::bind("127.0.0.1:0", Engine::builtin()).unwrap();
        let handle = server.spawn().unwrap();
        let out = send_raw(handle.addr(), "ru_noun;машина;cr;nx\0".as_bytes(), READ_TIMEOUT).unwrap();
        assert_eq!(out, "машин".as_bytes());
    }
}
