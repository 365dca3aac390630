def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def normalize(values):
    peak = max(values)
    scaled = []
    for v in values:
        scaled.append(v / peak)
    return scaled
# probe: normalize([2, 4, 8])
