//! Sub-utterance segmentation of the last context utterance.

/// Hard cap on the number of sub-utterances; trailing segments are merged.
pub const MAX_SUB_UTTERANCES: usize = 6;

fn is_terminal(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| matches!(c, '.' | '!' | '?'))
}

/// Split a tokenized utterance into `[u_0, u_1, …, u_t]`.
///
/// `u_0` is the whole utterance; `u_1..u_t` partition it, splitting after each
/// maximal run of sentence-final punctuation tokens (`.`, `!`, `?`). A single
/// sentence yields `[whole, whole]` so `t >= 1` always holds.
pub fn segment_last_utterance(utterance: &[String]) -> Vec<Vec<String>> {
    assert!(!utterance.is_empty(), "utterance must be non-empty");

    let mut segments: Vec<Vec<String>> = Vec::new();
    let mut current: Vec<String> = Vec::new();
    for (i, token) in utterance.iter().enumerate() {
        current.push(token.clone());
        let run_ends = is_terminal(token)
            && utterance.get(i + 1).map_or(true, |next| !is_terminal(next));
        if run_ends {
            segments.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        segments.push(current);
    }

    if segments.len() > MAX_SUB_UTTERANCES {
        let tail: Vec<String> =
            segments.drain(MAX_SUB_UTTERANCES - 1..).flatten().collect();
        segments.push(tail);
    }
    if segments.len() == 1 {
        segments = vec![utterance.to_vec()];
    }

    let mut out = Vec::with_capacity(segments.len() + 1);
    out.push(utterance.to_vec());
    out.extend(segments);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(str::to_string).collect()
    }

    #[test]
    fn single_sentence_duplicates() {
        let u = toks("i am fine .");
        let segs = segment_last_utterance(&u);
        assert_eq!(segs, vec![u.clone(), u]);
    }

    #[test]
    fn splits_on_terminal_punctuation() {
        let u = toks("i lost . i cried .");
        let segs = segment_last_utterance(&u);
        assert_eq!(segs.len(), 3);
        assert_eq!(segs[0], u);
        assert_eq!(segs[1], toks("i lost ."));
        assert_eq!(segs[2], toks("i cried ."));
    }

    #[test]
    fn merges_terminal_runs() {
        let u = toks("wow !!! really ?");
        let segs = segment_last_utterance(&u);
        assert_eq!(segs.len(), 3);
        assert_eq!(segs[1], toks("wow !!!"));
        assert_eq!(segs[2], toks("really ?"));
    }

    #[test]
    fn mixed_run_counts_as_one_boundary() {
        let u = toks("what ? ! ok .");
        let segs = segment_last_utterance(&u);
        assert_eq!(segs[1], toks("what ? !"));
        assert_eq!(segs[2], toks("ok ."));
    }

    #[test]
    fn caps_at_six_by_merging_tail() {
        let u = toks("a . b . c . d . e . f . g . h .");
        let segs = segment_last_utterance(&u);
        assert_eq!(segs.len(), MAX_SUB_UTTERANCES + 1);
        assert_eq!(segs[MAX_SUB_UTTERANCES], toks("f . g . h ."));
    }

    #[test]
    fn no_trailing_punctuation_keeps_tail_segment() {
        let u = toks("i lost . but fine");
        let segs = segment_last_utterance(&u);
        assert_eq!(segs[1], toks("i lost ."));
        assert_eq!(segs[2], toks("but fine"));
    }

    proptest! {
        #[test]
        fn concatenation_reproduces_input(raw in prop::collection::vec("[a-c.!?]{1,3}", 1..30)) {
            let u: Vec<String> = raw;
            let segs = segment_last_utterance(&u);
            prop_assert!(segs.len() >= 2);
            prop_assert_eq!(&segs[0], &u);
            let joined: Vec<String> = segs[1..].iter().flatten().cloned().collect();
            prop_assert_eq!(joined, u);
            prop_assert!(segs[1..].iter().all(|s| !s.is_empty()));
            prop_assert!(segs.len() - 1 <= MAX_SUB_UTTERANCES);
        }
    }
}
