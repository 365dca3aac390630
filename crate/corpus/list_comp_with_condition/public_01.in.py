def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def long_words(words, n):
    keep = []
    for w in words:
        if len(w) > n:
            keep.append(w.lower())
    return keep
# probe: long_words(['Apple', 'fig', 'Banana'], 3)
