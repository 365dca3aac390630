def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def tally(values):
    hits = 0
    for v in values:
        if v > 0:
            hits += 1
            if v > 10:
                hits += 1
    return hits
# probe: tally([1, 20, -3])
