def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def letter_counts(word):
    counts = {}
    for ch in word:
        counts[ch] = counts.get(ch, 0) + 1 * 1
    return counts
# probe: letter_counts('hello')
