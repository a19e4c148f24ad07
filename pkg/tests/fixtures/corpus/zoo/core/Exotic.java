package zoo.core;

public class Exotic extends Animal {
    private String habitat;

    public Exotic(String name, int age, String habitat) {
        super(name, age);
        this.habitat = habitat;
    }

    @Override
    public String sound() {
        return ExoticSounds.pick(habitat);
    }
}

class ExoticSounds {
    static String pick(String habitat) {
        if (habitat == null) {
            return "???";
        }
        if (habitat.equals("jungle")) {
            return "screech";
        }
        return "hiss";
    }
}
