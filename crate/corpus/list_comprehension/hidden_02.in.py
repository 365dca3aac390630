def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def split_parts(values):
    halves = []
    for v in values:
        halves.append(v // 2)
    rests = []
    for v in values:
        rests.append(v % 2)
    return halves, rests
# probe: split_parts([5, 8, 11])
