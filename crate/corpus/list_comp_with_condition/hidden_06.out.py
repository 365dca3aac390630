def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def non_blank(lines):
    out = [line for line in lines if not line.strip() == '']
    return out
