def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def prefixes(word):
    out = []
    for k in range(1, len(word) + 1):
        out.append(word[:k])
    return out
# probe: prefixes('abc')
