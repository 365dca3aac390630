def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def normalize(values):
    peak = max(values)
    scaled = [v / peak for v in values]
    return scaled
