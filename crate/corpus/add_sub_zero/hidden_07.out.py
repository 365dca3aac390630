def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def to_fahrenheit(celsius):
    scaled = celsius * 9 // 5
    return scaled + 32
