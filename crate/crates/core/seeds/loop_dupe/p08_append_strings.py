def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def banner(word):
    parts = []
    for ch in word:
        parts.append(ch.upper())
    return '-'.join(parts)
# probe: banner('abc')
