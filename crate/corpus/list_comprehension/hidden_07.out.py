def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def prefixes(word):
    out = [word[:k] for k in range(1, len(word) + 1)]
    return out
