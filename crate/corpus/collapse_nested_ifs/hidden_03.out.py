def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def is_hex_color(text):
    if len(text) == 7 and text[0] == '#':
        return True
    return False
